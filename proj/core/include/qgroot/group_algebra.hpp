#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qgroot/laurent.hpp"

namespace qgroot {

using Exponent = std::vector<int>;

/// Finitely supported map Z^rank -> Coeff with convolution product: the
/// group algebra of Z^rank, i.e. Laurent polynomials in commuting K_1..K_rank.
/// Zero coefficients are never stored.
template <class Coeff>
class GroupAlgebra {
 public:
  using Terms = std::map<Exponent, Coeff>;

  GroupAlgebra() = default;
  explicit GroupAlgebra(int rank) : rank_(rank) {}
  GroupAlgebra(int rank, const Coeff& c) : rank_(rank) {
    if (!(c == Coeff())) terms_.emplace(Exponent(static_cast<std::size_t>(rank), 0), c);
  }

  static GroupAlgebra monomial(int rank, Exponent e, const Coeff& c) {
    if (static_cast<int>(e.size()) != rank) throw MathError("exponent vector of wrong length");
    GroupAlgebra r(rank);
    if (!(c == Coeff())) r.terms_.emplace(std::move(e), c);
    return r;
  }
  /// K_i^e, i 1-based.
  static GroupAlgebra K(int rank, int i, int e) {
    if (i < 1 || i > rank) throw MathError("torus index out of range");
    Exponent x(static_cast<std::size_t>(rank), 0);
    x[static_cast<std::size_t>(i - 1)] = e;
    return monomial(rank, std::move(x), Coeff(1L));
  }

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add_term(const Exponent& e, const Coeff& c) {
    if (c == Coeff()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == Coeff()) terms_.erase(it);
    }
  }

  GroupAlgebra operator-() const {
    GroupAlgebra r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  GroupAlgebra& operator+=(const GroupAlgebra& o) {
    adopt_rank(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  GroupAlgebra& operator-=(const GroupAlgebra& o) {
    adopt_rank(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend GroupAlgebra operator+(GroupAlgebra a, const GroupAlgebra& b) { return a += b; }
  friend GroupAlgebra operator-(GroupAlgebra a, const GroupAlgebra& b) { return a -= b; }
  friend GroupAlgebra operator*(const GroupAlgebra& a, const GroupAlgebra& b) {
    GroupAlgebra r(a.rank_ ? a.rank_ : b.rank_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e = ea;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  GroupAlgebra& operator*=(const GroupAlgebra& o) { return *this = *this * o; }
  GroupAlgebra scaled(const Coeff& s) const {
    GroupAlgebra r(rank_);
    if (s == Coeff()) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  friend bool operator==(const GroupAlgebra& a, const GroupAlgebra& b) { return a.terms_ == b.terms_; }

  GroupAlgebra pow(unsigned n) const {
    GroupAlgebra result(rank_, Coeff(1L)), base = *this;
    while (n) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n) base *= base;
    }
    return result;
  }

  /// Applies f to every coefficient.
  template <class F>
  auto map_coeffs(F f) const {
    using Out = decltype(f(std::declval<const Coeff&>()));
    GroupAlgebra<Out> r(rank_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  /// Rebuilds with exponents e -> g(e) (and possibly a new rank).
  template <class G>
  GroupAlgebra map_exponents(int new_rank, G g) const {
    GroupAlgebra r(new_rank);
    for (const auto& [e, c] : terms_) r.add_term(g(e), c);
    return r;
  }

  /// "c*K1^e1*K2^e2 + ...", deterministic (lexicographic exponent) order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "K" + std::to_string(k + 1);
        if (e[k] != 1) mono += "^" + std::to_string(e[k]);
      }
      const std::string cs = c.str();
      if (mono.empty())
        out += "(" + cs + ")";
      else if (cs == "1")
        out += mono;
      else
        out += "(" + cs + ")*" + mono;
    }
    return out;
  }

 private:
  void adopt_rank(const GroupAlgebra& o) {
    if (rank_ == 0) rank_ = o.rank_;
  }
  int rank_ = 0;
  Terms terms_;
};

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const GroupAlgebra<Coeff>& x) {
  return os << x.str();
}

}  // namespace qgroot
