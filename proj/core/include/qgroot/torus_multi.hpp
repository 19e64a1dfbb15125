#pragma once

#include <vector>

#include "qgroot/report.hpp"
#include "qgroot/torus_generic.hpp"

namespace qgroot {

/// Symmetrizing parameters d = (d_i) of a multiply-laced torus; rank = d.size().
struct MultiParams {
  std::vector<int> d;

  int rank() const { return static_cast<int>(d.size()); }
  int d_of(int i) const;  // 1-based, throws on a bad index
  /// Throws MathError unless every d_i >= 1.
  void validate() const;
};

/// Coefficientwise v -> v^d.
GroupAlgElem substitute_power(const GroupAlgElem& x, int d);

// The elements of the multiply-laced torus, realized in A'[Z^I] as the
// simply-laced ones with v replaced by v^{d_i} in every structure constant.
GroupAlgElem multi_K(const MultiParams& p, int i, int e = 1);
GroupAlgElem multi_kbin(const MultiParams& p, int i, int c, int t);
GroupAlgElem multi_k(const MultiParams& p, int i, int t);
/// (K^n - K^-n) K^n / (n (v^{dn} - v^{-dn})).
GroupAlgElem multi_h(const MultiParams& p, int i, int n);
/// (1/n)(sum_s p_{n,s}(v^d) k_s K^{phi_n(s)}) K^n.
GroupAlgElem multi_h_from_p(const MultiParams& p, int i, int n);

/// True when xi^{2 d_i} != 1 for every i.
bool multi_hypothesis(int ell, const MultiParams& p);

/// Relations (b1)-(b5) for t, t', |c| <= bound, the two forms of h_{i,n},
/// basis independence under characters, and at the root of unity either the
/// per-factor isomorphism checks (hypothesis holds) or an informational
/// "hypothesis violated" entry.
Report verify_multi(int ell, const MultiParams& p, int bound);

}  // namespace qgroot
