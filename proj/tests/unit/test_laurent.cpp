#include "doctest.h"
#include "oracle.hpp"
#include "qgroot/qnumbers.hpp"

using namespace qgroot;

namespace {
const Rational points[] = {Rational(2), Rational(3, 2), Rational(-5, 7)};
}

TEST_CASE("laurent arithmetic and rendering") {
  const Laurent a = Laurent::v(-2) - Laurent(1);
  CHECK(a.str() == "v^-2 - 1");
  CHECK((Laurent::v(1) * Laurent::v(-1)).is_one());
  CHECK((a * a).str() == "v^-4 - 2*v^-2 + 1");
  CHECK(Laurent().str() == "0");
  CHECK(Laurent::v(3).scaled(Rational(1, 3)).str() == "1/3*v^3");
  CHECK(a.bar() == Laurent::v(2) - Laurent(1));
  CHECK(a.substitute_power(2) == Laurent::v(-4) - Laurent(1));
  CHECK(((a * a).exact_div(a)) == a);
  CHECK_THROWS_AS(Laurent::v(1).exact_div(Laurent::v(1) + Laurent(1)), MathError);
}

TEST_CASE("q-integers, factorials and binomials against direct evaluation") {
  for (const Rational& x : points) {
    for (int n = 1; n <= 9; ++n) CHECK(oracle::eval(q_int(n), x) == oracle::qint(n, x));
    for (int n = 0; n <= 9; ++n)
      for (int k = 0; k <= n; ++k) CHECK(oracle::eval(q_binomial(n, k), x) == oracle::qbinom(n, k, x));
  }
  CHECK(q_int(3).str() == "v^-2 + 1 + v^2");
  CHECK(q_binomial(4, 2).str() == "v^-4 + v^-2 + 2 + v^2 + v^4");
  CHECK(binomial(10, 4) == 210);
  CHECK_THROWS_AS(q_int(0), MathError);
}

TEST_CASE("rational functions normalize") {
  const Laurent vm = Laurent::v(1) - Laurent::v(-1);
  const RatFunc f = RatFunc::make(Laurent::v(2) - Laurent::v(-2), vm);
  CHECK(f.is_laurent());
  CHECK(f.to_laurent() == Laurent::v(1) + Laurent::v(-1));
  const RatFunc g = RatFunc(1L) / RatFunc(vm);
  CHECK(g * RatFunc(vm) == RatFunc(1L));
  for (const Rational& x : points) CHECK(oracle::eval(g + f, x) == Rational(1) / (x - 1 / x) + x + 1 / x);
  CHECK(g.substitute_power(2) == RatFunc(1L) / RatFunc(vm.substitute_power(2)));
}
