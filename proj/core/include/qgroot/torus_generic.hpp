#pragma once

#include <map>
#include <vector>

#include "qgroot/group_algebra.hpp"
#include "qgroot/ratfunc.hpp"

namespace qgroot {

/// Element of A'[Z^I]: Laurent polynomial in K_1..K_theta over Q(v).
using GroupAlgElem = GroupAlgebra<RatFunc>;

// ---- distinguished elements (i is 1-based, rank = theta) ----

/// a_{i,t} = (v^-t K_i - v^t K_i^-1) / (v - v^-1), t in Z.
GroupAlgElem a_elem(int rank, int i, int t);
/// k_{i,t} = [K_i;0;t] = (1/[t]!) prod_{s<t} a_{i,s}.
GroupAlgElem k_elem(int rank, int i, int t);
/// [K_i;c;t], defined for c < 0 by the expansion in K_i^j k_{i,t-j} with
/// coefficients (-1)^j v^{|c|(t-j)} [|c|+j-1 choose j], and for c >= 0 by the
/// expansion in K_i^-j k_{i,t-j} with coefficients v^{c(t-j)} [c choose j].
/// With inverse set, returns [K_i^-1;c;t], the antipode of [K_i;c;t].
GroupAlgElem kbin(int rank, int i, int c, int t, bool inverse = false);

/// h_{i,n} = (K_i^{2n} - 1) / (n (v^n - v^-n)).
GroupAlgElem h_elem(int rank, int i, int n);
/// h_{i,n} assembled from the p-polynomials:
/// (1/n) (sum_s p_{n,s} k_{i,s} K_i^{phi_n(s)}) K_i^n.
GroupAlgElem h_elem_from_p(int rank, int i, int n);

// ---- Hopf structure ----

/// Delta(K^e) = K^e (x) K^e; the tensor square is modelled as rank 2*theta
/// (first factor uses variables 1..theta, second theta+1..2 theta).
GroupAlgElem comult_torus(const GroupAlgElem& x);
RatFunc counit_torus(const GroupAlgElem& x);
GroupAlgElem antipode_torus(const GroupAlgElem& x);
/// a (x) b as an element of rank 2*theta.
GroupAlgElem tensor(const GroupAlgElem& a, const GroupAlgElem& b);
/// Multiplication map of rank 2*theta back to rank theta.
GroupAlgElem multiply_legs(const GroupAlgElem& x);
/// Applies Delta to block `leg` of an element whose variables form blocks of
/// size theta; the result has one block more. Coassociativity is
/// comult_on_leg(Delta x, 0) == comult_on_leg(Delta x, 1).
GroupAlgElem comult_on_leg(const GroupAlgElem& x, int leg, int theta);

/// The automorphism K_i -> -K_i.
GroupAlgElem phi_automorphism(const GroupAlgElem& x);

// ---- p-polynomials ----

/// phi_n(j) = 0 if n - j is even, 1 otherwise.
int phi_parity(int n, int j);
/// p_{n,s}, 1 <= s <= n, by the defining recursion; integrality is asserted
/// (throws MathError otherwise).
Laurent p_poly(int n, int s);
/// Closed form v^{-C(n,2)} (-1)^{n-1} (v - v^-1)^{n-1} [n-1]!.
Laurent p_diag_closed(int n);

struct IdentityCheck {
  bool holds = false;
  GroupAlgElem difference;
};

/// K^n - K^-n against (v^n - v^-n) sum_s p_{n,s} k_s K^{phi_n(s)} in A'[Z].
IdentityCheck verify_Kn_identity(int n);

/// Lower triangular matrix P (rows and columns indexed 1..n) with entries
/// p_{r,s} K^{phi_r(s)}, rank 1.
std::vector<std::vector<GroupAlgElem>> p_matrix(int n);
/// Its inverse, by forward substitution.
std::vector<std::vector<GroupAlgElem>> q_matrix(int n);

/// k_{i,n} = sum_s c_s h_{i,s}; returns c_1..c_n (index s-1) in rank 1,
/// where c_s = q_{n,s} s K^-s.
std::vector<GroupAlgElem> k_from_h(int n);

// ---- characters ----

/// Xi_{i,j}: K_i -> v^j (tilde: -v^j), K_p -> 1 for p != i.
RatFunc char_eval(const GroupAlgElem& x, int i, int j, bool tilde = false);

// ---- PBW basis model ----

struct TorusBasisMonomial {
  std::vector<int> delta;  // 0 or 1
  std::vector<int> t;      // >= 0
  friend bool operator<(const TorusBasisMonomial& a, const TorusBasisMonomial& b) {
    return a.delta != b.delta ? a.delta < b.delta : a.t < b.t;
  }
  friend bool operator==(const TorusBasisMonomial& a, const TorusBasisMonomial& b) {
    return a.delta == b.delta && a.t == b.t;
  }
};

using TorusElem = std::map<TorusBasisMonomial, RatFunc>;

/// Unique expression in the basis K^delta k^t.
TorusElem to_basis(const GroupAlgElem& x);
GroupAlgElem expand(const TorusElem& y, int rank);

}  // namespace qgroot
