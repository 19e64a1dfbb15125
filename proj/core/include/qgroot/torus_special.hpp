#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgroot/cyclotomic.hpp"
#include "qgroot/group_algebra.hpp"
#include "qgroot/report.hpp"
#include "qgroot/torus_generic.hpp"

namespace qgroot {

/// The specialization v -> zeta = xi^d. d = 1 is the simply-laced case;
/// other d arise from the multiply-laced torus.
struct RootOfUnity {
  const CycParams* params = nullptr;
  int d = 1;

  RootOfUnity() = default;
  explicit RootOfUnity(const CycParams& p, int d_ = 1) : params(&p), d(d_) {}

  int ell() const { return params->ell; }
  CycNum zeta_pow(long e) const { return CycNum::xi_pow(*params, e * d); }
  CycNum spec(const Laurent& x) const { return specialize(x, *params, d); }
  CycNum spec(const RatFunc& x) const { return specialize(x, *params, d); }
  /// [n choose i]_zeta
  CycNum binom(int n, int i) const { return xi_binomial(*params, n, i, d); }
  friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
    return a.params != b.params ? a.params < b.params : a.d < b.d;
  }
};

/// g^p t^m with 0 <= p_i < 2 ell.
struct SpecTorusMonomial {
  std::vector<int> p;
  std::vector<int> m;
  friend bool operator<(const SpecTorusMonomial& a, const SpecTorusMonomial& b) {
    return a.m != b.m ? a.m < b.m : a.p < b.p;
  }
  friend bool operator==(const SpecTorusMonomial& a, const SpecTorusMonomial& b) {
    return a.p == b.p && a.m == b.m;
  }
};

/// Element of B Gamma (x) U(h), Gamma = (Z/2 ell)^rank, U(h) = B[t_1..t_rank].
class SpecTorusElem {
 public:
  using Terms = std::map<SpecTorusMonomial, CycNum>;

  SpecTorusElem() = default;
  SpecTorusElem(int rank, int ell) : rank_(rank), ell_(ell) {}
  SpecTorusElem(int rank, int ell, const CycNum& c);

  static SpecTorusElem monomial(int rank, int ell, std::vector<int> p, std::vector<int> m, const CycNum& c);
  /// g_i^e (any integer e), i 1-based.
  static SpecTorusElem g(int rank, int ell, int i, int e = 1);
  static SpecTorusElem t(int rank, int ell, int i);

  int rank() const { return rank_; }
  int ell() const { return ell_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycNum coeff(const SpecTorusMonomial& m) const;
  /// Total t-degree of the highest term (0 for grouplike combinations).
  int t_degree() const;

  void add_term(const SpecTorusMonomial& m, const CycNum& c);

  SpecTorusElem operator-() const;
  SpecTorusElem& operator+=(const SpecTorusElem& o);
  SpecTorusElem& operator-=(const SpecTorusElem& o);
  friend SpecTorusElem operator+(SpecTorusElem a, const SpecTorusElem& b) { return a += b; }
  friend SpecTorusElem operator-(SpecTorusElem a, const SpecTorusElem& b) { return a -= b; }
  friend SpecTorusElem operator*(const SpecTorusElem& a, const SpecTorusElem& b);
  SpecTorusElem& operator*=(const SpecTorusElem& o) { return *this = *this * o; }
  SpecTorusElem scaled(const CycNum& s) const;
  friend bool operator==(const SpecTorusElem& a, const SpecTorusElem& b) { return a.terms_ == b.terms_; }
  SpecTorusElem pow(unsigned n) const;

  /// "c*g1^p*t1^m + ..."; coefficients rendered in xi.
  std::string str() const;

 private:
  void adopt(const SpecTorusElem& o);
  int rank_ = 0;
  int ell_ = 0;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const SpecTorusElem& x);

/// Element of B[Z^I] before imposing K^{2 ell} = 1.
using CycGroupElem = GroupAlgebra<CycNum>;

/// Specializes coefficients of a generic element (v -> zeta); exponents kept.
CycGroupElem specialize_group(const GroupAlgElem& x, const RootOfUnity& z);
/// Imposes K_i -> g_i (exponents modulo 2 ell).
SpecTorusElem to_spec(const CycGroupElem& x, int ell);
SpecTorusElem to_spec(const GroupAlgElem& x, const RootOfUnity& z);

// ---- Hopf structure of B Gamma (x) U(h) ----

/// Rank 2*theta tensor square; g -> g (x) g, t -> t (x) 1 + 1 (x) t.
SpecTorusElem spec_comult(const SpecTorusElem& x);
CycNum spec_counit(const SpecTorusElem& x);
SpecTorusElem spec_antipode(const SpecTorusElem& x);
SpecTorusElem spec_tensor(const SpecTorusElem& a, const SpecTorusElem& b);
SpecTorusElem spec_multiply_legs(const SpecTorusElem& x);
/// Applies f to the first (leg 0) or second (leg 1) factor of a rank 2*theta tensor.
template <class F>
SpecTorusElem spec_apply_leg(const SpecTorusElem& x, int leg, F f);

// ---- images of the generic generators ----

SpecTorusElem spec_K(const RootOfUnity& z, int rank, int i, int e = 1);
/// Image of h_{i,ell}: the primitive generator t_i.
SpecTorusElem spec_h(const RootOfUnity& z, int rank, int i);
/// Image of k_{i,t} for every t >= 0 (see the source for the construction).
SpecTorusElem spec_k(const RootOfUnity& z, int rank, int i, int t);
/// Image of [K_i;c;t] (or [K_i^-1;c;t] with inverse set).
SpecTorusElem spec_kbin(const RootOfUnity& z, int rank, int i, int c, int t, bool inverse = false);

/// h_{i,ell} = lead k_{i,ell} K_i^ell + sum_t b_t K_i^{2t} in V^0_B.
struct BCoeffs {
  CycNum lead;               // p_{ell,ell}(zeta) / ell
  std::vector<CycNum> b;     // b_0 .. b_{ell-1}
  bool odd_exponents_vanish = true;
  CycGroupElem remainder;    // sum_{s<ell} (p_{ell,s}/ell) k_s K^{phi(s)+ell}, unreduced
};
BCoeffs b_coeffs(const RootOfUnity& z);

/// Relation (g8) at t = ell-1, t' = 1, evaluated in B[K^{+-1}] without
/// imposing K^{2 ell} = 1.
struct K2ellDerivation {
  CycNum lhs_coeff;     // [ell choose ell-1]_zeta
  CycGroupElem rhs;     // right-hand side
  CycNum c;             // rhs = c (K^ell - K^-ell)
  bool ok = false;      // lhs_coeff == 0, c != 0, rhs proportional as stated
};
K2ellDerivation derive_K2ell(const RootOfUnity& z);

/// Characters of the specialized torus: g_i -> zeta^j (tilde: -zeta^j),
/// t_i -> image of h_{i,ell} under the generic character.
CycNum spec_char(const SpecTorusElem& x, const RootOfUnity& z, int i, int j, bool tilde = false);

/// Rank of a matrix over B (Gaussian elimination).
int cyc_rank(std::vector<std::vector<CycNum>> rows);

/// Product formula for k_{i,n ell} and the splitting k_{m ell + t'} = k_{m ell} k_{t'}.
Report verify_k_nl(const RootOfUnity& z, int n_max);
/// Full isomorphism verification for the rank-one torus: relations up to
/// `bound`, Hopf compatibility, characters and the evaluation-matrix rank.
Report verify_iso(const RootOfUnity& z, int bound);

// ---- template implementation ----

template <class F>
SpecTorusElem spec_apply_leg(const SpecTorusElem& x, int leg, F f) {
  const int th = x.rank() / 2;
  SpecTorusElem out(x.rank(), x.ell());
  for (const auto& [mono, c] : x.terms()) {
    SpecTorusMonomial a{{mono.p.begin(), mono.p.begin() + th}, {mono.m.begin(), mono.m.begin() + th}};
    SpecTorusMonomial b{{mono.p.begin() + th, mono.p.end()}, {mono.m.begin() + th, mono.m.end()}};
    SpecTorusElem ea = SpecTorusElem::monomial(th, x.ell(), a.p, a.m, CycNum(1));
    SpecTorusElem eb = SpecTorusElem::monomial(th, x.ell(), b.p, b.m, CycNum(1));
    if (leg == 0)
      ea = f(ea);
    else
      eb = f(eb);
    out += spec_tensor(ea, eb).scaled(c);
  }
  return out;
}

}  // namespace qgroot
