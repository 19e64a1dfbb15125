#include "doctest.h"
#include "oracle.hpp"
#include "qgroot/torus_multi.hpp"

using namespace qgroot;

TEST_CASE("multiply-laced elements") {
  const MultiParams p{{1, 2}};
  CHECK(p.rank() == 2);
  const MultiParams bad{{1, 0}};
  CHECK_THROWS_AS(bad.validate(), MathError);
  CHECK_THROWS_AS(p.d_of(3), MathError);
  // h_{2,1} = (K_2^2 - 1)/(v^2 - v^-2) at K_2 = 5, v = 3/2
  const Rational x(3, 2), k0(5);
  Rational val(0);
  const GroupAlgElem h = multi_h(p, 2, 1);
  for (const auto& [e, c] : h.terms()) val += oracle::eval(c, x) * oracle::power(k0, e[1]);
  CHECK(val == (k0 * k0 - 1) / (x * x - 1 / (x * x)));
  for (int n = 1; n <= 4; ++n) CHECK(multi_h(p, 2, n) == multi_h_from_p(p, 2, n));
  CHECK(multi_kbin(p, 1, 2, 3) == kbin(2, 1, 2, 3));
}

TEST_CASE("hypothesis xi^{2 d_i} != 1") {
  CHECK(multi_hypothesis(5, {{1, 2}}));
  CHECK(multi_hypothesis(4, {{1, 2}}));
  CHECK(!multi_hypothesis(2, {{1, 2}}));
  CHECK(!multi_hypothesis(3, {{3}}));
}

TEST_CASE("verification at ell = 5 and the violated hypothesis at ell = 2") {
  const Report ok = verify_multi(5, {{1, 2}}, 4);
  INFO(ok.text());
  CHECK(ok.all_pass());
  const Report viol = verify_multi(2, {{1, 2}}, 4);
  CHECK(viol.all_pass());
  bool flagged = false;
  for (const auto& c : viol.checks)
    flagged = flagged || (c.status == Status::Info && c.witness.find("hypothesis violated") != std::string::npos);
  CHECK(flagged);
}
