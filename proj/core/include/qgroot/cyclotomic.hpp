#pragma once

#include <string>
#include <vector>

#include "qgroot/laurent.hpp"
#include "qgroot/ratfunc.hpp"

namespace qgroot {

/// n-th cyclotomic polynomial, by exact division of v^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n.
Laurent cyclotomic_polynomial(int n);

/// The root-of-unity data attached to ell: ell' (= ell for odd ell, 2 ell for
/// even ell) and Phi_{ell'}. Instances are interned and live for the whole
/// program, so references and pointers to them stay valid.
struct CycParams {
  int ell = 0;
  int ell_prime = 0;
  int degree = 0;
  Laurent phi;
  /// xi^k reduced modulo Phi, k = 0 .. ell'-1.
  std::vector<std::vector<Rational>> xi_powers;

  static const CycParams& get(int ell);
};

/// make_params(ell); ell >= 2.
inline const CycParams& make_params(int ell) { return CycParams::get(ell); }

/// Element of B = Q[v]/(Phi_{ell'}); xi denotes the class of v.
///
/// A CycNum without attached parameters is a rational constant and combines
/// with numbers of any field.
class CycNum {
 public:
  CycNum() = default;
  CycNum(long c);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& c);  // NOLINT(google-explicit-constructor)
  CycNum(const CycParams& p, std::vector<Rational> coeffs);

  /// xi^e for any integer e.
  static CycNum xi_pow(const CycParams& p, long e);

  const CycParams* params() const { return params_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_rational() const { return coeffs_.size() <= 1; }
  Rational rational_value() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi.
  CycNum inverse() const;
  CycNum pow(long e) const;

  /// Reduced polynomial in xi, ascending: "1/2 - xi + 3*xi^2".
  std::string str(const std::string& var = "xi") const;

 private:
  void trim();
  void reduce();
  const CycParams* params_ = nullptr;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

CycNum cyc_inverse(const CycNum& x);

/// Raised when a rational function has a pole at the root of unity.
class NotSpecializable : public MathError {
 public:
  NotSpecializable(const Laurent& denominator, const std::string& what)
      : MathError(what), denominator_(denominator) {}
  const Laurent& denominator() const { return denominator_; }

 private:
  Laurent denominator_;
};

/// Ring map v -> xi^d (d = 1 is the standard specialization).
CycNum specialize(const Laurent& x, const CycParams& p, int d = 1);
/// Field-of-fractions version; cancels cyclotomic factors shared by numerator
/// and denominator before declaring a pole.
CycNum specialize(const RatFunc& x, const CycParams& p, int d = 1);

/// [n choose i] at v = xi^d, computed by the q-Pascal recursion inside B.
/// Zero when i < 0 or i > n; n < 0 also gives zero.
CycNum xi_binomial(const CycParams& p, int n, int i, int d = 1);

}  // namespace qgroot
