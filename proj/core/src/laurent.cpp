#include "qgroot/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qgroot {

Laurent::Laurent(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

Laurent::Laurent(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Laurent Laurent::monomial(const Rational& c, int exponent) {
  Laurent r;
  if (c != 0) {
    r.low_ = exponent;
    r.coeffs_.push_back(c);
  }
  return r;
}

Laurent Laurent::v(int exponent) { return monomial(1, exponent); }

Laurent Laurent::from_coeffs(int low, std::vector<Rational> coeffs) {
  Laurent r;
  r.low_ = low;
  r.coeffs_ = std::move(coeffs);
  r.trim();
  return r;
}

void Laurent::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
}

bool Laurent::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

bool Laurent::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

int Laurent::low() const {
  if (is_zero()) throw MathError("Laurent::low on zero");
  return low_;
}

int Laurent::high() const {
  if (is_zero()) throw MathError("Laurent::high on zero");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational Laurent::coeff(int exponent) const {
  const long k = static_cast<long>(exponent) - low_;
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + k] += o.coeffs_[k];
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::scaled(const Rational& c) const {
  if (c == 0) return {};
  Laurent r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

Laurent Laurent::pow(unsigned n) const {
  Laurent result(1), base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

Laurent Laurent::bar() const {
  if (is_zero()) return {};
  Laurent r;
  r.low_ = -high();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

Laurent Laurent::substitute_power(int d) const {
  if (d == 0) {
    Rational s = 0;
    for (const auto& c : coeffs_) s += c;
    return Laurent(s);
  }
  if (d < 0) return substitute_power(-d).bar();
  if (is_zero()) return {};
  Laurent r;
  r.low_ = low_ * d;
  r.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(d) + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k * static_cast<std::size_t>(d)] = coeffs_[k];
  return r;
}

Laurent Laurent::exact_div(const Laurent& d) const {
  if (d.is_zero()) throw MathError("division by zero Laurent polynomial");
  if (is_zero()) return {};
  poly::Vec q, r;
  poly::divmod(coeffs_, d.coeffs_, q, r);
  if (!r.empty()) throw MathError("inexact Laurent division: (" + str() + ") / (" + d.str() + ")");
  return from_coeffs(low_ - d.low_, std::move(q));
}

bool Laurent::divides(const Laurent& x) const {
  if (is_zero()) return x.is_zero();
  if (x.is_zero()) return true;
  poly::Vec q, r;
  poly::divmod(x.coeffs_, coeffs_, q, r);
  return r.empty();
}

namespace {

void append_term(std::ostringstream& out, bool first, const Rational& c, int e) {
  Rational mag = abs(c);
  if (first) {
    if (c < 0) out << '-';
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (e == 0) {
    out << mag.get_str();
    return;
  }
  if (mag != 1) out << mag.get_str() << '*';
  out << 'v';
  if (e != 1) out << '^' << e;
}

}  // namespace

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    append_term(out, first, coeffs_[k], low_ + static_cast<int>(k));
    first = false;
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& x) { return os << x.str(); }

namespace poly {

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void divmod(const Vec& a, const Vec& b, Vec& q, Vec& r) {
  if (b.empty()) throw MathError("polynomial division by zero");
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  const bool monic = lead == 1;
  for (std::size_t k = r.size(); k-- >= b.size();) {
    if (r[k] == 0) continue;
    Rational f = monic ? r[k] : Rational(r[k] / lead);
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= f * b[j];
  }
  trim(r);
  trim(q);
}

namespace {

using ZVec = std::vector<Integer>;

ZVec primitive_part(const Vec& a) {
  Integer l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZVec z(a.size());
  Integer g = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    z[k] = a[k].get_num() * (l / a[k].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[k].get_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& c : z) c /= g;
  return z;
}

void zprimitive(ZVec& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0 && g != 1)
    for (auto& c : a) c /= g;
}

void ztrim(ZVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Pseudo-remainder of a by b over Z.
ZVec prem(ZVec a, const ZVec& b) {
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    ztrim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

Vec gcd(const Vec& a0, const Vec& b0) {
  Vec a = a0, b = b0;
  trim(a);
  trim(b);
  if (a.empty() && b.empty()) return {};
  ZVec x = a.empty() ? ZVec{} : primitive_part(a);
  ZVec y = b.empty() ? ZVec{} : primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZVec r = prem(x, y);
    zprimitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  Vec g(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) g[k] = Rational(x[k], x.back());
  for (auto& c : g) c.canonicalize();
  return g;
}

Vec mul(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

}  // namespace poly

}  // namespace qgroot
