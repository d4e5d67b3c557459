#include <benchmark/benchmark.h>

#include "xraypent/paper_system.hpp"

using namespace xraypent;

static void BM_FinalResultant(benchmark::State& state) {
  const DetOptions options{static_cast<DetBackend>(state.range(0)), 0};
  for (auto _ : state) benchmark::DoNotOptimize(compute_final_resultant(options));
  state.SetLabel(std::string(backend_name(options.backend)));
}
BENCHMARK(BM_FinalResultant)
    ->Arg(static_cast<int>(DetBackend::eval_interp))
    ->Arg(static_cast<int>(DetBackend::bareiss))
    ->Unit(benchmark::kMillisecond);

static void BM_StageV(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_v());
}
BENCHMARK(BM_StageV)->Unit(benchmark::kMillisecond);

static void BM_SliceResultant(benchmark::State& state) {
  const MultiPoly f = equation(EquationTag::R1).substitute_cleared(Var::x, Rational(3, 7));
  const MultiPoly g = equation(EquationTag::R2).substitute_cleared(Var::x, Rational(3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g, Var::u));
}
BENCHMARK(BM_SliceResultant)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
