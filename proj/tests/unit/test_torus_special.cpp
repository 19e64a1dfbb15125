#include "doctest.h"
#include "qgroot/torus_special.hpp"

using namespace qgroot;

TEST_CASE("b coefficients") {
  // From sympy: h_ell - lead k_ell K^ell reduced modulo K^{2 ell} = 1 at v = xi.
  const BCoeffs b3 = b_coeffs(RootOfUnity(CycParams::get(3)));
  CHECK(b3.lead.is_one());
  REQUIRE(b3.b.size() == 3);
  CHECK(b3.b[0].str() == "1/3");
  CHECK(b3.b[1].str() == "-2/9 - 1/9*xi");
  CHECK(b3.b[2].str() == "-1/9 + 1/9*xi");
  CHECK(b3.odd_exponents_vanish);

  const BCoeffs b4 = b_coeffs(RootOfUnity(CycParams::get(4)));
  CHECK(b4.lead == CycNum(-1L));
  REQUIRE(b4.b.size() == 4);
  CHECK(b4.b[0].str() == "-3/8");
  CHECK(b4.b[1].str() == "1/8 - 1/8*xi^2");
  CHECK(b4.b[2].str() == "1/8");
  CHECK(b4.b[3].str() == "1/8 + 1/8*xi^2");

  const BCoeffs b5 = b_coeffs(RootOfUnity(CycParams::get(5)));
  CHECK(b5.lead.is_one());
  CHECK(b5.b[0].str() == "2/5");
  CHECK(b5.b[2].str() == "-4/25 - 3/25*xi - 2/25*xi^2 - 1/25*xi^3");
}

TEST_CASE("K^{2 ell} = 1 is forced by the relations") {
  for (int ell = 2; ell <= 5; ++ell) {
    const K2ellDerivation d = derive_K2ell(RootOfUnity(CycParams::get(ell)));
    CHECK(d.ok);
    CHECK(d.lhs_coeff.is_zero());
    CHECK(!d.c.is_zero());
  }
}

TEST_CASE("specialized torus elements") {
  const RootOfUnity z(CycParams::get(3));
  const SpecTorusElem g = SpecTorusElem::g(1, 3, 1);
  CHECK(g.pow(6) == SpecTorusElem(1, 3, CycNum(1L)));
  CHECK(spec_K(z, 1, 1, -1) == g.pow(5));
  CHECK(spec_h(z, 1, 1) == SpecTorusElem::t(1, 3, 1));
  // k_1 = (K - K^-1)/(xi - xi^-1)
  const CycNum c = (z.zeta_pow(1) - z.zeta_pow(-1)).inverse();
  CHECK(spec_k(z, 1, 1, 1) == (g - g.pow(5)).scaled(c));
  // t is primitive
  const SpecTorusElem t = SpecTorusElem::t(1, 3, 1);
  const SpecTorusElem one(1, 3, CycNum(1L));
  CHECK(spec_comult(t) == spec_tensor(t, one) + spec_tensor(one, t));
  CHECK(spec_antipode(t) == -t);
  CHECK(spec_counit(t).is_zero());
  CHECK(spec_counit(g).is_one());
}

TEST_CASE("k_{n ell} product formula and the isomorphism, ell = 2..5") {
  for (int ell = 2; ell <= 5; ++ell) {
    const RootOfUnity z(CycParams::get(ell));
    const Report a = verify_k_nl(z, 4);
    INFO(a.text());
    CHECK(a.all_pass());
    const Report b = verify_iso(z, 2 * ell);
    INFO(b.text());
    CHECK(b.all_pass());
  }
}
