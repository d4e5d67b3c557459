#include <benchmark/benchmark.h>

#include "xraypent/curve_solver.hpp"
#include "xraypent/paper_system.hpp"

using namespace xraypent;

static void BM_TraceFinalCurve(benchmark::State& state) {
  static const MultiPoly curve = compute_final_resultant();
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_curve(curve, grid, Domain{}));
}
BENCHMARK(BM_TraceFinalCurve)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_RealRoots(benchmark::State& state) {
  const std::vector<double> p{1, -2.5, 0.3, 1.7, -0.9, 0.11, 0.05, -0.02};
  for (auto _ : state) benchmark::DoNotOptimize(real_roots(p, -10, 10));
}
BENCHMARK(BM_RealRoots);

static void BM_BackSolve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(back_solve(0.41, 0.27));
}
BENCHMARK(BM_BackSolve);

BENCHMARK_MAIN();
