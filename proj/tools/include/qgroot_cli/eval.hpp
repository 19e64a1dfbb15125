#pragma once

#include <string>

#include "qgroot/torus_generic.hpp"
#include "qgroot/torus_multi.hpp"
#include "qgroot/uq.hpp"
#include "qgroot_cli/expr.hpp"

namespace qgroot::cli {

/// Evaluates in V_B at the root of unity of u; v and xi both denote xi.
/// h[i;n] needs n = ell or ell not dividing n.
UElem eval_root(const UqAlgebra& u, const Expr& e);

/// Evaluates in the generic torus A'[Z^I] of the given rank; only torus
/// atoms and v are allowed. With multi set, the rank is multi->rank() and
/// the atoms are those of the multiply-laced torus.
GroupAlgElem eval_generic(int rank, const Expr& e, const MultiParams* multi = nullptr);

/// "(c)*K[1]^2*K[2]^-1 + ..." with the coefficient 1 omitted; parses back
/// to the same element.
std::string render_generic(const GroupAlgElem& x);

}  // namespace qgroot::cli
