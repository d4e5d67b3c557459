#include <benchmark/benchmark.h>

#include "xraypent/paper_system.hpp"

using namespace xraypent;

static void BM_MultiplyR1R2(benchmark::State& state) {
  const auto& r1 = equation(EquationTag::R1);
  const auto& r2 = equation(EquationTag::R2);
  for (auto _ : state) benchmark::DoNotOptimize(r1 * r2);
}
BENCHMARK(BM_MultiplyR1R2);

static void BM_PowerOfSum(benchmark::State& state) {
  const MultiPoly p = parse_poly("u + v + w + x + y + z + 1");
  for (auto _ : state) benchmark::DoNotOptimize(p.pow(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_PowerOfSum)->Arg(4)->Arg(8);

static void BM_ParseFormat(benchmark::State& state) {
  const std::string text = format_poly(equation(EquationTag::R1));
  for (auto _ : state) benchmark::DoNotOptimize(format_poly(parse_poly(text)));
}
BENCHMARK(BM_ParseFormat);

static void BM_ExactDivision(benchmark::State& state) {
  const auto& r1 = equation(EquationTag::R1);
  const MultiPoly product = r1 * equation(EquationTag::R2);
  for (auto _ : state) benchmark::DoNotOptimize(product.try_exact_div(r1));
}
BENCHMARK(BM_ExactDivision);

static void BM_EvalFloat(benchmark::State& state) {
  const auto& r1 = equation(EquationTag::R1);
  FloatAssignment at{0.3, 0.0, 0.0, 0.4, 0.7, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(eval_float(r1, at));
}
BENCHMARK(BM_EvalFloat);

BENCHMARK_MAIN();
