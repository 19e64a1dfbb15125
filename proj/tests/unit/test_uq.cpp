#include "doctest.h"
#include "qgroot/qnumbers.hpp"
#include "qgroot/uq.hpp"

using namespace qgroot;

TEST_CASE("Cartan data") {
  CHECK(Cartan::named("A2").a == Cartan::named("2,-1;-1,2").a);
  CHECK(Cartan::named("A1xA1").rank() == 2);
  CHECK(!Cartan::named("A1xA1").connected());
  CHECK_THROWS_AS(Cartan::named("2,-2;-2,2").validate(), MathError);
  CHECK_THROWS_AS(Cartan::named("B7"), MathError);
}

TEST_CASE("divided powers multiply by q-binomials") {
  for (int ell : {3, 4, 5}) {
    const UqAlgebra u(Cartan::named("A1"), ell);
    const CycParams& p = CycParams::get(ell);
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        const CycNum c = specialize(q_binomial(a + b, a), p);
        CHECK(u.multiply(u.E(1, a), u.E(1, b)) == u.E(1, a + b).scaled(c));
        CHECK(u.multiply(u.F(1, a), u.F(1, b)) == u.F(1, a + b).scaled(c));
      }
  }
  const UqAlgebra u(Cartan::named("A1"), 3);
  CHECK(u.str(u.multiply(u.E(1, 2), u.E(1, 3))) == "E[1;5]");
  CHECK(u.multiply(u.E(1, 1), u.E(1, 2)).is_zero());  // [3]_xi = 0
}

TEST_CASE("torus and generator relations") {
  const UqAlgebra u(Cartan::named("A2"), 3);
  const CycParams& p = CycParams::get(3);
  const CycNum xi = CycNum::xi_pow(p, 1);
  CHECK(u.multiply(u.K(1, 1), u.K(1, -1)) == u.one());
  CHECK(u.multiply(u.multiply(u.K(1), u.E(1, 1)), u.K(1, -1)) == u.E(1, 1).scaled(xi * xi));
  CHECK(u.multiply(u.multiply(u.K(1), u.E(2, 1)), u.K(1, -1)) == u.E(2, 1).scaled(xi.inverse()));
  CHECK(u.multiply(u.multiply(u.K(2), u.F(1, 1)), u.K(2, -1)) == u.F(1, 1).scaled(xi));
  // E F - F E = (K - K^-1)/(xi - xi^-1)
  CHECK(u.multiply(u.E(1, 1), u.F(1, 1)) - u.multiply(u.F(1, 1), u.E(1, 1)) == u.k(1, 1));
  CHECK(u.multiply(u.E(1, 1), u.F(2, 1)) == u.multiply(u.F(2, 1), u.E(1, 1)));
  // quantum Serre relation
  const UElem e1 = u.E(1, 1), e2 = u.E(2, 1);
  const UElem serre = u.multiply(u.multiply(e1, e1), e2) -
                      u.multiply(u.multiply(e1, e2), e1).scaled(xi + xi.inverse()) +
                      u.multiply(e2, u.multiply(e1, e1));
  CHECK(serre.is_zero());
  CHECK(u.composite_expanded(Side::E, 1, 2, 1) == u.composite(Side::E, 1, 2, 1));
}

TEST_CASE("coproduct, counit, rendering") {
  const UqAlgebra u(Cartan::named("A1"), 3);
  CHECK(u.str(u.comultiply(u.E(1, 1))) == "(1)*K[1] (x) E[1;1] + (1)*E[1;1] (x) (1)");
  CHECK(u.counit(u.E(1, 1)).is_zero());
  CHECK(u.counit(u.K(1, 1)).is_one());
  CHECK(u.counit(u.h(1)).is_zero());
  const UElem x = u.multiply(u.E(1, 1), u.F(1, 1));
  CHECK(u.tensor_apply(u.comultiply(x), true) == x);
  CHECK(u.tensor_apply(u.comultiply(x), false) == x);
  CHECK(u.str(u.one() - u.one()) == "0");
}

TEST_CASE("t commutation constants") {
  const UqAlgebra u(Cartan::named("A2"), 3);
  CHECK(u.derive_t_commutation(1, 1, 1, Side::E) == CycNum(Rational(2, 3)));
  CHECK(u.derive_t_commutation(1, 2, 1, Side::E) == CycNum(Rational(-1, 3)));
  CHECK(u.derive_t_commutation(1, 1, 3, Side::E) == CycNum(2L));
  CHECK(u.derive_t_commutation(2, 1, 3, Side::E) == CycNum(-1L));
}

TEST_CASE("engine suites at ell = 3") {
  for (const char* name : {"A1", "A1xA1", "A2"}) {
    const UqAlgebra u(Cartan::named(name), 3);
    for (const Report& r : {verify_kl_commutators(u), verify_t_commutators(u), verify_counit_table(u, 4, 4),
                            verify_relations(u, 2), verify_bialgebra(u, 2), confluence_sweep(u, 2)}) {
      INFO(name, " ", r.text());
      CHECK(r.all_pass());
    }
  }
}

TEST_CASE("even ell reports the t constants") {
  const UqAlgebra u(Cartan::named("A1"), 4);
  const Report r = verify_t_commutators(u);
  CHECK(r.count(Status::Fail) == 0);
  CHECK(r.count(Status::Info) > 0);
}
