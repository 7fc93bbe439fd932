#include <benchmark/benchmark.h>

#include "polyconst/constants.hpp"
#include "polyconst/objectives.hpp"
#include "polyconst/oracle.hpp"
#include "polyconst/sup_norm.hpp"

using namespace polyconst;

static void BM_SupNorm(benchmark::State& state) {
  const ExtendedExponent p(static_cast<double>(state.range(0)));
  const SphereGrid grid(p, ScanConfig{}.scan_points);
  const HomogeneousPoly2 P{0.3, -1.1, 0.8, 0.2, -0.5};
  for (auto _ : state) benchmark::DoNotOptimize(sup_norm(P, grid));
}
BENCHMARK(BM_SupNorm)->Arg(3)->Arg(10);

static void BM_SupNormOracle(benchmark::State& state) {
  const HomogeneousPoly2 P{0.3, -1.1, 0.8, 0.2, -0.5};
  for (auto _ : state) benchmark::DoNotOptimize(sup_norm_oracle(P, ExtendedExponent(3), 2000));
}
BENCHMARK(BM_SupNormOracle);

static void BM_MaximizeFqp(benchmark::State& state) {
  const auto f = Objective::make_fqp(ExtendedExponent(1.6), 8.0);
  for (auto _ : state) benchmark::DoNotOptimize(maximize(f, 0.0, 1.0).value);
}
BENCHMARK(BM_MaximizeFqp);

static void BM_L2OfPower(benchmark::State& state) {
  const auto P = ext_supp(ExtendedExponent(4.0 * state.range(0)), 0.3, GrecuFamily::II);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(l2_of_power(P, m).log_magnitude);
}
BENCHMARK(BM_L2OfPower)->Arg(10)->Arg(100)->Arg(400);

static void BM_BigK(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(big_K(ExtendedExponent(4.0 / 3.0), ExtendedExponent(3)).value);
}
BENCHMARK(BM_BigK);
BENCHMARK_MAIN();
