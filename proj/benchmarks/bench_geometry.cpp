#include <benchmark/benchmark.h>

#include "xraypent/tomo_geom.hpp"

using namespace xraypent;

namespace {

ConvexPolygon regular_ish(int n) {
  // Rational points on an arc of the unit circle, t in [-2, 2]; increasing t
  // walks the circle counterclockwise.
  std::vector<Point2> pts;
  for (int k = 0; k <= 2 * n; ++k) {
    Rational t(2 * (k - n), n);
    t.canonicalize();
    const Rational d = 1 + t * t;
    pts.push_back(Point2{(1 - t * t) / d, 2 * t / d});
  }
  return validate_polygon(std::move(pts));
}

}  // namespace

static void BM_ChordFunction(benchmark::State& state) {
  const ConvexPolygon p = regular_ish(static_cast<int>(state.range(0)));
  const Direction d(Rational(3), Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(chord_function(p, d));
}
BENCHMARK(BM_ChordFunction)->Arg(4)->Arg(16)->Arg(64);

static void BM_SteinerSymmetral(benchmark::State& state) {
  const ConvexPolygon p = regular_ish(static_cast<int>(state.range(0)));
  const Direction d(Rational(1), Rational(-4));
  for (auto _ : state) benchmark::DoNotOptimize(steiner_symmetral(p, d));
}
BENCHMARK(BM_SteinerSymmetral)->Arg(4)->Arg(16)->Arg(64);

static void BM_TriangleSearch(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(find_ambiguous_triangles(seed++));
}
BENCHMARK(BM_TriangleSearch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
