#pragma once

#include "qgroot/laurent.hpp"

namespace qgroot {

/// [s]_v = (v^s - v^-s) / (v - v^-1); s >= 1.
Laurent q_int(int s);

/// [N]_v^! = [1]_v [2]_v ... [N]_v, with [0]^! = 1.
Laurent q_factorial(int n);

/// Gaussian binomial [N choose i]_v for N, i >= 0; zero when i > N.
/// Computed by exact division of q-factorials.
Laurent q_binomial(int n, int i);

/// Ordinary binomial coefficient C(n, k), zero outside 0 <= k <= n.
Integer binomial(int n, int k);

}  // namespace qgroot
