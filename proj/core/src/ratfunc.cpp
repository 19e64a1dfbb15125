#include "qgroot/ratfunc.hpp"

#include <ostream>

namespace qgroot {

RatFunc RatFunc::make(const Laurent& n, const Laurent& d) {
  if (d.is_zero()) throw MathError("rational function with zero denominator");
  RatFunc r;
  r.num_ = n;
  r.den_ = d;
  r.normalize();
  return r;
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  if (den_.is_monomial()) {
    const int e = den_.low();
    num_ = num_.shifted(-e).scaled(1 / den_.coeff(e));
    den_ = Laurent(1);
    return;
  }
  const int dlow = den_.low();
  num_ = num_.shifted(-dlow);
  den_ = den_.shifted(-dlow);
  poly::Vec g = poly::gcd(num_.dense(), den_.dense());
  if (g.size() > 1) {
    const Laurent gl = Laurent::from_coeffs(0, std::move(g));
    num_ = num_.exact_div(gl);
    den_ = den_.exact_div(gl);
  }
  const int shift = den_.low();
  if (shift != 0) {
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
  }
  const Rational c = den_.coeff(0);
  if (c != 1) {
    const Rational inv = 1 / c;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

const Laurent& RatFunc::to_laurent() const {
  if (!is_laurent()) throw MathError("not a Laurent polynomial: " + str());
  return num_;
}

bool RatFunc::in_localized_ring() const {
  Laurent d = den_;
  const Laurent f = Laurent(1) - Laurent::v(2);
  while (!d.is_constant() && f.divides(d)) d = d.exact_div(f);
  // The normalized denominator has constant term 1, so what remains is 1 exactly
  // when the denominator was a power of (1 - v^2).
  return d.is_constant() && num_.is_integral();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Laurent(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  num_ *= o.num_;
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw MathError("division by zero rational function");
  return make(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::bar() const { return make(num_.bar(), den_.bar()); }

RatFunc RatFunc::substitute_power(int d) const {
  if (d == 0) throw MathError("v -> v^0 is not a field map");
  return make(num_.substitute_power(d), den_.substitute_power(d));
}

std::string RatFunc::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.str(); }

}  // namespace qgroot
