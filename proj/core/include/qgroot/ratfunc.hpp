#pragma once

#include "qgroot/laurent.hpp"

namespace qgroot {

/// Element of Q(v) in lowest terms.
///
/// Normal form: the denominator is an ordinary polynomial with nonzero
/// constant term equal to 1; every power of v lives in the numerator. Two
/// rational functions are equal iff their stored forms are equal.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Laurent x) : num_(std::move(x)), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// n / d; throws MathError when d is zero.
  static RatFunc make(const Laurent& n, const Laurent& d);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }
  /// The Laurent polynomial this equals; throws if the denominator is not 1.
  const Laurent& to_laurent() const;
  /// Membership in Z[v, v^-1, (1 - v^2)^-1].
  bool in_localized_ring() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const;
  RatFunc bar() const;
  RatFunc substitute_power(int d) const;

  /// "num" or "(num)/(den)".
  std::string str() const;

 private:
  void normalize();
  Laurent num_;
  Laurent den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& x);

}  // namespace qgroot
