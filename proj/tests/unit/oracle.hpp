#pragma once

// Independent evaluations used as oracles by the unit tests.

#include "qgroot/laurent.hpp"
#include "qgroot/ratfunc.hpp"

namespace oracle {

using qgroot::Laurent;
using qgroot::RatFunc;
using qgroot::Rational;

inline Rational power(const Rational& x, int e) {
  Rational r(1);
  for (int k = 0; k < (e < 0 ? -e : e); ++k) r *= x;
  return e < 0 ? Rational(1) / r : r;
}

inline Rational eval(const Laurent& p, const Rational& x) {
  Rational r(0);
  if (p.is_zero()) return r;
  for (int e = p.low(); e <= p.high(); ++e) r += p.coeff(e) * power(x, e);
  return r;
}

inline Rational eval(const RatFunc& f, const Rational& x) { return eval(f.num(), x) / eval(f.den(), x); }

// [n]_x = (x^n - x^-n) / (x - x^-1)
inline Rational qint(int n, const Rational& x) {
  return (power(x, n) - power(x, -n)) / (x - power(x, -1));
}

inline Rational qbinom(int n, int k, const Rational& x) {
  Rational r(1);
  for (int j = 0; j < k; ++j) r *= qint(n - j, x) / qint(j + 1, x);
  return r;
}

}  // namespace oracle
