#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "qgroot/torus_generic.hpp"
#include "qgroot/torus_verify.hpp"

using namespace qgroot;

namespace {

// Element of the rank-one torus evaluated at K = k0, v = x.
Rational eval_at(const GroupAlgElem& g, const Rational& k0, const Rational& x) {
  Rational r(0);
  for (const auto& [e, c] : g.terms()) r += oracle::eval(c, x) * oracle::power(k0, e[0]);
  return r;
}

}  // namespace

TEST_CASE("p table matches the independent solve of the K^n - K^-n expansion") {
  // Produced by solving K^n - K^-n = (v^n - v^-n) sum_s p_{n,s} k_s K^{phi_n(s)}
  // for the p_{n,s} with sympy.
  std::ifstream in(QGROOT_GOLDEN_DIR "/tables_p_6.txt");
  REQUIRE(in);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    int n = 0, s = 0;
    REQUIRE(std::sscanf(line.c_str(), "p[%d,%d]", &n, &s) == 2);
    const std::string expected = line.substr(line.find(" = ") + 3);
    CHECK(p_poly(n, s).str() == expected);
    ++rows;
  }
  CHECK(rows == 21);
  const Report r = verify_p_table();
  CHECK(r.all_pass());
}

TEST_CASE("k_t evaluated against its product definition") {
  const Rational xs[] = {Rational(2), Rational(3, 2)};
  const Rational ks[] = {Rational(3), Rational(-1, 2)};
  for (const Rational& x : xs)
    for (const Rational& k0 : ks)
      for (int t = 0; t <= 6; ++t) {
        Rational prod(1);
        for (int s = 0; s < t; ++s)
          prod *= (oracle::power(x, -s) * k0 - oracle::power(x, s) / k0) / (x - 1 / x) / oracle::qint(s + 1, x);
        CHECK(eval_at(k_elem(1, 1, t), k0, x) == prod);
      }
}

TEST_CASE("h_n closed form") {
  const Rational x(3, 2), k0(5);
  for (int n = 1; n <= 6; ++n) {
    const Rational expected = (oracle::power(k0, 2 * n) - 1) / (n * (oracle::power(x, n) - oracle::power(x, -n)));
    CHECK(eval_at(h_elem(1, 1, n), k0, x) == expected);
  }
}

TEST_CASE("Q inverts P") {
  const int n = 5;
  const auto p = p_matrix(n);
  const auto q = q_matrix(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      GroupAlgElem sum(1);
      for (int j = 0; j < n; ++j) sum += p[r][j] * q[j][c];
      CHECK(sum == GroupAlgElem(1, RatFunc(r == c ? 1L : 0L)));
    }
}

TEST_CASE("Hopf structure of the generic torus") {
  const GroupAlgElem k3 = k_elem(1, 1, 3);
  CHECK(multiply_legs(tensor(GroupAlgElem::K(1, 1, 2), k3)) == GroupAlgElem::K(1, 1, 2) * k3);
  CHECK(counit_torus(k3) == RatFunc());
  CHECK(counit_torus(kbin(1, 1, 2, 2)) == RatFunc(1L));  // [1;2;2] at K = 1 is [2 choose 2]
  CHECK(comult_on_leg(comult_torus(k3), 0, 1) == comult_on_leg(comult_torus(k3), 1, 1));
  CHECK(antipode_torus(GroupAlgElem::K(1, 1, 3)) == GroupAlgElem::K(1, 1, -3));
  CHECK(expand(to_basis(k3 * k3), 1) == k3 * k3);
}

TEST_CASE("generic torus identities up to n = 12") {
  const Report r = verify_torus_generic(12);
  INFO(r.text());
  CHECK(r.all_pass());
  CHECK(r.count(Status::Info) == 1);
}
