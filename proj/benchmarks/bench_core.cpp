#include <benchmark/benchmark.h>

#include "qgroot/cyclotomic.hpp"
#include "qgroot/qnumbers.hpp"
#include "qgroot/td_datum.hpp"
#include "qgroot/torus_generic.hpp"
#include "qgroot/uq.hpp"

using namespace qgroot;

static void BM_QBinomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_binomial(n, n / 2));
}
BENCHMARK(BM_QBinomial)->Arg(8)->Arg(16)->Arg(32);

static void BM_CycInverse(benchmark::State& state) {
  const CycParams& p = CycParams::get(static_cast<int>(state.range(0)));
  const CycNum x = CycNum(3L) + CycNum::xi_pow(p, 1) + CycNum::xi_pow(p, 2) * CycNum(2L);
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_CycInverse)->Arg(5)->Arg(7)->Arg(12);

// p_{n,s} is memoized after the first iteration; the sum is rebuilt every time.
static void BM_KnIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_Kn_identity(n));
}
BENCHMARK(BM_KnIdentity)->Arg(4)->Arg(8)->Arg(12);

static void BM_EngineProduct(benchmark::State& state) {
  const UqAlgebra u(Cartan::named("A2"), 3);
  const UElem x = u.multiply(u.F(1, 2), u.F(2, 2));
  const UElem y = u.multiply(u.E(1, 2), u.E(2, 2));
  for (auto _ : state) benchmark::DoNotOptimize(u.multiply(x, y));
}
BENCHMARK(BM_EngineProduct);

static void BM_Comultiply(benchmark::State& state) {
  const UqAlgebra u(Cartan::named("A2"), 3);
  const UElem x = u.multiply(u.E(1, 2), u.multiply(u.h(1), u.F(2, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(u.comultiply(x));
}
BENCHMARK(BM_Comultiply);

static void BM_LeftAction(benchmark::State& state) {
  const UqAlgebra u(Cartan::named("A2"), 3);
  const UElem b = u.multiply(u.F(1, 1), u.F(2, 1));
  const UElem a = u.multiply(u.E(2, 2), u.E(1, 2));
  for (auto _ : state) {
    const TDDatum td(u);  // fresh memo tables each round
    benchmark::DoNotOptimize(td.harpoon_left(b, a));
  }
}
BENCHMARK(BM_LeftAction);

BENCHMARK_MAIN();
