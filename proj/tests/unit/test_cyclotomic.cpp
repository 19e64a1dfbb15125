#include "doctest.h"
#include "qgroot/cyclotomic.hpp"
#include "qgroot/qnumbers.hpp"
#include "qgroot/torus_verify.hpp"

using namespace qgroot;

// Expected values below were computed with sympy in Q[x]/(Phi_{ell'}).

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1).str() == "-1 + v");
  CHECK(cyclotomic_polynomial(2).str() == "1 + v");
  CHECK(cyclotomic_polynomial(6).str() == "1 - v + v^2");
  CHECK(cyclotomic_polynomial(8).str() == "1 + v^4");
  CHECK(cyclotomic_polynomial(12).str() == "1 - v^2 + v^4");
  CHECK(CycParams::get(3).ell_prime == 3);
  CHECK(CycParams::get(4).ell_prime == 8);
  CHECK(CycParams::get(4).degree == 4);
}

TEST_CASE("field arithmetic in B") {
  const CycParams& p5 = CycParams::get(5);
  const CycParams& p4 = CycParams::get(4);
  const CycNum a5 = CycNum(1L) + CycNum::xi_pow(p5, 1) * CycNum(2L);
  const CycNum a4 = CycNum(1L) + CycNum::xi_pow(p4, 1) * CycNum(2L);
  CHECK(a5.inverse().str() == "-5/11 - 6/11*xi - 4/11*xi^2 - 8/11*xi^3");
  CHECK(a4.inverse().str() == "1/17 - 2/17*xi + 4/17*xi^2 - 8/17*xi^3");
  CHECK((a5 * a5.inverse()).is_one());
  CHECK(CycNum::xi_pow(p5, 5).is_one());
  CHECK(CycNum::xi_pow(p4, 4) == CycNum(-1L));
  CHECK(CycNum::xi_pow(p5, -1) == CycNum::xi_pow(p5, 4));
  CHECK_THROWS_AS(CycNum(0L).inverse(), MathError);
}

TEST_CASE("specialization") {
  const CycParams& p3 = CycParams::get(3);
  const CycParams& p4 = CycParams::get(4);
  const CycParams& p5 = CycParams::get(5);
  CHECK(specialize(q_int(3), p5).str() == "1 + xi^2 + xi^3");
  CHECK(specialize(q_int(2), p3) == CycNum(-1L));
  CHECK(xi_binomial(p4, 6, 2).is_one());
  CHECK(xi_binomial(p5, 7, 3).is_zero());
  for (int ell = 2; ell <= 6; ++ell) {
    const CycParams& p = CycParams::get(ell);
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= n; ++k) CHECK(xi_binomial(p, n, k) == specialize(q_binomial(n, k), p));
  }
  CHECK_THROWS_AS(specialize(RatFunc::make(Laurent(1), q_int(3)), p3), NotSpecializable);
  // a common cyclotomic factor cancels before specializing
  CHECK(specialize(RatFunc::make(q_int(6), q_int(3)), p3) == specialize(Laurent::v(3) + Laurent::v(-3), p3));
  CHECK(specialize(q_int(2), p3, 2) == specialize(q_int(2).substitute_power(2), p3));
}

TEST_CASE("identities in B for ell = 2..6") {
  for (int ell = 2; ell <= 6; ++ell) {
    const Report r = verify_cyclotomic(ell, 4);
    INFO(r.text());
    CHECK(r.all_pass());
    CHECK(r.count(Status::Pass) == 9);
  }
}
