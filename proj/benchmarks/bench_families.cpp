#include <benchmark/benchmark.h>

#include "qboole/families.hpp"
#include "qboole/identities.hpp"

using namespace qboole;

namespace {

void BM_StirlingTable(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    StirlingTable table(n);
    benchmark::DoNotOptimize(table.s1(n, n / 2));
  }
}
BENCHMARK(BM_StirlingTable)->Arg(16)->Arg(32)->Arg(64);

void BM_EulerNumbers(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    FamilyContext ctx(n);
    benchmark::DoNotOptimize(ctx.q_euler_number(n, 3));
  }
}
BENCHMARK(BM_EulerNumbers)->Arg(8)->Arg(12)->Arg(16);

void BM_SeriesInverse(benchmark::State& state) {
  const FamilyContext ctx(16);
  const std::size_t order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.boole_first_gf(2, BigRational(2), order));
  }
}
BENCHMARK(BM_SeriesInverse)->Arg(8)->Arg(12)->Arg(16);

void BM_BooleFirstGenFunc(benchmark::State& state) {
  const FamilyContext ctx(12);
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.q_boole_first_upto(n, 2, BigRational(2)));
  }
}
BENCHMARK(BM_BooleFirstGenFunc)->Arg(8)->Arg(12);

void BM_BooleFirstStirling(benchmark::State& state) {
  const FamilyContext ctx(12);
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ctx.q_boole_first_upto(n, 2, BigRational(2), BuildPath::StirlingTransform));
  }
}
BENCHMARK(BM_BooleFirstStirling)->Arg(8)->Arg(12);

void BM_VerifyThm28(benchmark::State& state) {
  const FamilyContext ctx(8);
  VerifyRanges r;
  r.n_max = 8;
  r.k_max = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(ctx, IdentityId::Thm2_8, r));
  }
}
BENCHMARK(BM_VerifyThm28);

}  // namespace

BENCHMARK_MAIN();
