#pragma once

#include "qgroot/report.hpp"

namespace qgroot {

/// The p-polynomials for n <= 3 against their frozen rendering.
Report verify_p_table();

/// Generic torus identities up to n_max: closed form of p_{n,n} against the
/// recursion, the K^n - K^-n expansion, the coproduct of k_t, both forms of
/// h_n, the inverse matrix Q, and the low k_t written in the h's.
Report verify_torus_generic(int n_max);

/// Identities in B for the given ell: vanishing of Phi_ell(xi^2), the powers
/// xi^ell, xi^{2 ell}, xi^{ell^2}, vanishing binomials below ell, and the
/// quotient and binomial evaluations for m, n <= m_max.
Report verify_cyclotomic(int ell, int m_max);

}  // namespace qgroot
