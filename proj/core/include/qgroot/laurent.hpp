#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qgroot {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised on an illegal algebraic operation (division by zero, inexact
/// division where exactness is required, out-of-domain arguments).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of Q[v, v^-1]. The integral subring Z[v, v^-1] is recognised with
/// is_integral(); arithmetic is always carried out over Q.
///
/// Stored densely: coefficient of v^(low_ + k) at index k, with nonzero
/// first and last entries. The zero polynomial has an empty vector.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Laurent monomial(const Rational& c, int exponent);
  /// v^exponent
  static Laurent v(int exponent = 1);
  /// Builds c_0 v^low + c_1 v^(low+1) + ...
  static Laurent from_coeffs(int low, std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_integral() const;

  /// Lowest / highest exponent with nonzero coefficient; zero has none.
  int low() const;
  int high() const;
  Rational coeff(int exponent) const;
  const std::vector<Rational>& dense() const { return coeffs_; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  Laurent scaled(const Rational& c) const;
  /// Multiplies by v^k.
  Laurent shifted(int k) const;
  Laurent pow(unsigned n) const;

  /// v -> v^-1
  Laurent bar() const;
  /// v -> v^d
  Laurent substitute_power(int d) const;

  /// Quotient in Q[v, v^-1] when d divides *this exactly; throws MathError
  /// otherwise or when d is zero.
  Laurent exact_div(const Laurent& d) const;
  bool divides(const Laurent& x) const;

  /// Canonical rendering, ascending exponents: "v^-2 + 3 + 2*v^5".
  std::string str() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& x);

/// Dense polynomial helpers on coefficient vectors (index = degree); shared
/// with the rational-function and cyclotomic code.
namespace poly {
using Vec = std::vector<Rational>;
void trim(Vec& a);
/// Quotient and remainder of a by b (b nonzero).
void divmod(const Vec& a, const Vec& b, Vec& q, Vec& r);
/// Monic gcd over Q.
Vec gcd(const Vec& a, const Vec& b);
Vec mul(const Vec& a, const Vec& b);
}  // namespace poly

}  // namespace qgroot
