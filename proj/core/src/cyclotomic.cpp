#include "qgroot/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>

namespace qgroot {

Laurent cyclotomic_polynomial(int n) {
  if (n < 1) throw MathError("cyclotomic polynomial index must be positive");
  Laurent r = Laurent::v(n) - Laurent(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) r = r.exact_div(cyclotomic_polynomial(d));
  return r;
}

namespace {

std::vector<Rational> reduce_mod(std::vector<Rational> a, const Laurent& phi) {
  poly::trim(a);
  const auto& f = phi.dense();
  const std::size_t deg = f.size() - 1;
  // phi is monic with integer coefficients.
  for (std::size_t k = a.size(); k-- > deg;) {
    if (a[k] == 0) continue;
    const Rational c = a[k];
    const std::size_t shift = k - deg;
    for (std::size_t j = 0; j <= deg; ++j) a[shift + j] -= c * f[j];
  }
  if (a.size() > deg) a.resize(deg);
  poly::trim(a);
  return a;
}

}  // namespace

const CycParams& CycParams::get(int ell) {
  if (ell < 2) throw MathError("ell must be at least 2, got " + std::to_string(ell));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycParams>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[ell];
  if (!slot) {
    auto p = std::make_unique<CycParams>();
    p->ell = ell;
    p->ell_prime = ell % 2 == 1 ? ell : 2 * ell;
    p->phi = cyclotomic_polynomial(p->ell_prime);
    p->degree = p->phi.high();
    p->xi_powers.reserve(static_cast<std::size_t>(p->ell_prime));
    for (int k = 0; k < p->ell_prime; ++k) {
      std::vector<Rational> mono(static_cast<std::size_t>(k + 1), Rational(0));
      mono[static_cast<std::size_t>(k)] = 1;
      p->xi_powers.push_back(reduce_mod(std::move(mono), p->phi));
    }
    slot = std::move(p);
  }
  return *slot;
}

CycNum::CycNum(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

CycNum::CycNum(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

CycNum::CycNum(const CycParams& p, std::vector<Rational> coeffs) : params_(&p), coeffs_(std::move(coeffs)) {
  reduce();
}

CycNum CycNum::xi_pow(const CycParams& p, long e) {
  long k = e % p.ell_prime;
  if (k < 0) k += p.ell_prime;
  CycNum r;
  r.params_ = &p;
  r.coeffs_ = p.xi_powers[static_cast<std::size_t>(k)];
  return r;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw MathError("not a rational element of B: " + str());
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

void CycNum::trim() { poly::trim(coeffs_); }

void CycNum::reduce() {
  if (params_ != nullptr && coeffs_.size() > static_cast<std::size_t>(params_->degree))
    coeffs_ = reduce_mod(std::move(coeffs_), params_->phi);
  else
    trim();
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (params_ == nullptr) params_ = o.params_;
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (params_ == nullptr) params_ = o.params_;
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  if (o.coeffs_.size() == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (coeffs_.size() == 1) {
    const Rational s = coeffs_[0];
    coeffs_ = o.coeffs_;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  coeffs_ = poly::mul(coeffs_, o.coeffs_);
  reduce();
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw MathError("inverse of zero in cyclotomic field");
  if (coeffs_.size() == 1) return CycNum(Rational(1 / coeffs_[0]));
  // Extended Euclid: find s with s * a = 1 mod phi.
  const auto& phi = params_->phi.dense();
  poly::Vec r0 = phi, r1 = coeffs_;
  poly::Vec s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    if (r1.empty()) throw MathError("element shares a factor with the cyclotomic polynomial");
    poly::Vec q, r;
    poly::divmod(r0, r1, q, r);
    poly::Vec qs = poly::mul(q, s1);
    poly::Vec s2 = s0;
    if (qs.size() > s2.size()) s2.resize(qs.size(), Rational(0));
    for (std::size_t k = 0; k < qs.size(); ++k) s2[k] -= qs[k];
    poly::trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational c = 1 / r1[0];
  for (auto& x : s1) x *= c;
  return CycNum(*params_, std::move(s1));
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1), base = *this;
  result.params_ = params_;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string CycNum::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (k != 1) out << '^' << k;
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.str(); }

CycNum cyc_inverse(const CycNum& x) { return x.inverse(); }

CycNum specialize(const Laurent& x, const CycParams& p, int d) {
  std::vector<Rational> acc(static_cast<std::size_t>(p.degree), Rational(0));
  if (!x.is_zero()) {
    const auto& c = x.dense();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      long e = (static_cast<long>(x.low()) + static_cast<long>(k)) * d % p.ell_prime;
      if (e < 0) e += p.ell_prime;
      const auto& xp = p.xi_powers[static_cast<std::size_t>(e)];
      for (std::size_t j = 0; j < xp.size(); ++j) acc[j] += c[k] * xp[j];
    }
  }
  return CycNum(p, std::move(acc));
}

CycNum specialize(const RatFunc& x, const CycParams& p, int d) {
  if (d != 1) return specialize(x.substitute_power(d), p, 1);
  if (x.is_laurent()) return specialize(x.num(), p, 1);
  CycNum den = specialize(x.den(), p);
  if (!den.is_zero()) return specialize(x.num(), p) / den;
  Laurent num = x.num(), dn = x.den();
  while (p.phi.divides(dn)) {
    if (!p.phi.divides(num))
      throw NotSpecializable(x.den(), "not specializable at xi (ell=" + std::to_string(p.ell) +
                                          "): denominator " + x.den().str() + " vanishes");
    num = num.exact_div(p.phi);
    dn = dn.exact_div(p.phi);
  }
  return specialize(num, p) / specialize(dn, p);
}

CycNum xi_binomial(const CycParams& p, int n, int i, int d) {
  if (n < 0 || i < 0 || i > n) return CycNum();
  using Key = std::tuple<const CycParams*, int, int, int>;
  static std::mutex mu;
  static std::map<Key, CycNum> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({&p, d, n, i});
    if (it != memo.end()) return it->second;
  }
  CycNum r;
  if (i == 0 || i == n) {
    r = CycNum(p, {Rational(1)});
  } else {
    r = CycNum::xi_pow(p, static_cast<long>(i) * d) * xi_binomial(p, n - 1, i, d) +
        CycNum::xi_pow(p, static_cast<long>(i - n) * d) * xi_binomial(p, n - 1, i - 1, d);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(Key{&p, d, n, i}, r);
  return r;
}

}  // namespace qgroot
