#include "qgroot/qnumbers.hpp"

#include <cassert>

namespace qgroot {

namespace {

// q-Pascal recursion; used only to cross-check the factorial route in debug builds.
[[maybe_unused]] Laurent q_binomial_pascal(int n, int i) {
  if (i < 0 || i > n) return {};
  std::vector<Laurent> row{Laurent(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Laurent> next(static_cast<std::size_t>(m + 1));
    for (int j = 0; j <= m; ++j) {
      Laurent x;
      if (j <= m - 1) x += row[static_cast<std::size_t>(j)].shifted(j);
      if (j >= 1) x += row[static_cast<std::size_t>(j - 1)].shifted(j - m);
      next[static_cast<std::size_t>(j)] = std::move(x);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

}  // namespace

Laurent q_int(int s) {
  if (s <= 0) throw MathError("q_int requires s >= 1, got " + std::to_string(s));
  std::vector<Rational> c(static_cast<std::size_t>(2 * s - 1), Rational(0));
  for (std::size_t k = 0; k < c.size(); k += 2) c[k] = 1;
  return Laurent::from_coeffs(1 - s, std::move(c));
}

Laurent q_factorial(int n) {
  if (n < 0) throw MathError("q_factorial of negative integer");
  Laurent r(1);
  for (int s = 2; s <= n; ++s) r *= q_int(s);
  return r;
}

Laurent q_binomial(int n, int i) {
  if (n < 0 || i < 0) throw MathError("q_binomial requires N, i >= 0");
  if (i > n) return {};
  const Laurent r = q_factorial(n).exact_div(q_factorial(n - i) * q_factorial(i));
  assert(r == q_binomial_pascal(n, i));
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace qgroot
