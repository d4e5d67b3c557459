#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "xraypent/curve_solver.hpp"
#include "xraypent/paper_system.hpp"

using namespace xraypent;

namespace {

std::vector<double> roots(std::initializer_list<double> desc, double lo, double hi) {
  const std::vector<double> c(desc);
  return real_roots(c, lo, hi);
}

double eval_desc(const std::vector<double>& c, double t) {
  double acc = 0;
  for (double k : c) acc = acc * t + k;
  return acc;
}

}  // namespace

TEST_CASE("real_roots examples") {
  const auto a = roots({1, 0, -0.25}, 0, 1);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(roots({1, 0, 1}, -10, 10).empty());

  // double root collapses to one
  const auto b = roots({1, -2, 1}, -5, 5);
  REQUIRE(b.size() == 1);
  CHECK(std::fabs(b[0] - 1) < 1e-7);

  const auto c = roots({1, -6, 11, -6}, 0, 10);
  REQUIRE(c.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(std::fabs(c[static_cast<std::size_t>(i)] - (i + 1)) < 1e-12);
  CHECK(roots({1, -6, 11, -6}, 1.5, 2.5).size() == 1);
  CHECK(roots({2, -1}, -1, 1) == std::vector<double>{0.5});
}

TEST_CASE("real_roots agree with the companion matrix") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> coef(-20, 20);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> c(6);
    for (auto& k : c) k = coef(rng);
    if (c[0] == 0) c[0] = 1;
    const auto got = real_roots(c, -25, 25);
    const auto want = oracle::companion_real_roots(c, -25, 25);
    // skip near-double roots, where the eigenvalue oracle itself is unreliable
    bool clustered = false;
    for (std::size_t i = 1; i < want.size(); ++i) clustered |= want[i] - want[i - 1] < 1e-4;
    if (clustered) continue;
    ++compared;
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::fabs(got[i] - want[i]) <= 1e-9 * std::max(1.0, std::fabs(want[i])));
  }
  CHECK(compared > 150);
}

TEST_CASE("real_roots miss no sign change on a fine lattice") {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> c(7);
    for (auto& k : c) k = coef(rng);
    if (c[0] == 0) c[0] = -3;
    const double lo = -3, hi = 3;
    const auto found = real_roots(c, lo, hi);
    constexpr int kPoints = 10000;
    for (int i = 0; i < kPoints; ++i) {
      const double a = lo + (hi - lo) * i / kPoints, b = lo + (hi - lo) * (i + 1) / kPoints;
      if ((eval_desc(c, a) < 0) == (eval_desc(c, b) < 0)) continue;
      const bool covered = std::any_of(found.begin(), found.end(), [&](double r) { return r >= a - 1e-12 && r <= b + 1e-12; });
      CHECK(covered);
    }
  }
}

TEST_CASE("scaled coefficients keep ratios") {
  const auto c = scaled_coefficients(parse_poly("4*y^2 - 1"), Var::y);
  REQUIRE(c.size() == 3);
  CHECK(c[1] == 0.0);
  CHECK(c[0] / c[2] == -4.0);
  const auto r = real_roots(c, 0, 1);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(0.5));
}

TEST_CASE("validate_tuple") {
  ParameterTuple t{0.25, 0.0, 0.25, 0.5, 0.25, 0.0};
  const auto r = validate_tuple(t);
  REQUIRE(r.residuals.size() == 6);
  REQUIRE(r.side_margins.size() == 9);
  CHECK(r.residuals[0] == 0.0);
  CHECK(r.residuals[1] == 0.0);
  CHECK(r.residuals[5] == 0.0625);
  CHECK_FALSE(r.in_range[index_of(Var::v)]);
  CHECK_FALSE(r.in_range[index_of(Var::z)]);
  CHECK(r.in_range[index_of(Var::u)]);
  CHECK_FALSE(r.all_in_range());

  const auto zero = validate_tuple(ParameterTuple{});
  CHECK(zero.residuals[2] == 1.0);
  CHECK(zero.side_margins.back() == 0.0);  // u + w
  CHECK(zero.min_side_margin() == 0.0);

  AdmissibleBox wide;
  wide.bounds.fill({-1.0, 1.0});
  CHECK(validate_tuple(t, wide).all_in_range());
}

TEST_CASE("scaled residual") {
  const MultiPoly p = parse_poly("3*x^2 - 1");
  FloatAssignment at{};
  at[index_of(Var::x)] = 2.0;
  at[index_of(Var::v)] = 1e9;  // ignored: p does not contain v
  CHECK(scaled_residual(p, at) == doctest::Approx(11.0 / (1 + 4 * 4)));
}

TEST_CASE("trace of a circle") {
  const MultiPoly circle = parse_poly("4*x^2 + 4*y^2 - 1");
  const auto pts = trace_curve(circle, 64, Domain{});
  REQUIRE(pts.size() > 50);
  for (const auto& p : pts) {
    CHECK(std::fabs(p.cx * p.cx + p.cy * p.cy - 0.25) <= 0.05);
    CHECK(std::hypot(p.cx, p.cy) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(p.residual >= 0);
    CHECK(p.cx >= 0);
    CHECK(p.cy <= 1);
  }
}

TEST_CASE("trace of the diagonal") {
  const auto pts = trace_curve(parse_poly("x - y"), 8, Domain{});
  REQUIRE_FALSE(pts.empty());
  for (const auto& p : pts) CHECK(std::fabs(p.cx - p.cy) < 1e-12);
  CHECK(trace_curve(parse_poly("x + y + 1"), 16, Domain{}).empty());
}

TEST_CASE("trace is independent of the worker count") {
  const MultiPoly f = parse_poly("4*x^3 - 8*x*y + 4*y^2 - 1");
  const auto one = format_csv(trace_curve(f, 97, Domain{}, 1));
  CHECK(format_csv(trace_curve(f, 97, Domain{}, 3)) == one);
  CHECK(format_csv(trace_curve(f, 97, Domain{}, 8)) == one);

  const auto pts = trace_curve(f, 97, Domain{}, 2);
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1].cell <= pts[i].cell);
}

TEST_CASE("trace argument checks") {
  CHECK_THROWS_AS(trace_curve(parse_poly("x"), 1, Domain{}), std::invalid_argument);
  CHECK_THROWS_AS(trace_curve(parse_poly("x"), 8, Domain{1, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(trace_curve(MultiPoly(), 8, Domain{}), std::invalid_argument);
  CHECK_THROWS_AS(trace_curve(parse_poly("u + x"), 8, Domain{}), std::invalid_argument);
}

TEST_CASE("csv and svg output") {
  std::vector<CurvePoint> pts(2);
  pts[0].cx = 0.1;
  pts[0].cy = 0.25;
  pts[1].cx = 1.0 / 3;
  pts[1].cy = 0.5;
  pts[1].residual = 1e-17;
  const auto csv = format_csv(pts);
  CHECK(csv.rfind("x,y,residual\n", 0) == 0);
  CHECK(csv.find("0.10000000000000001,0.25,0\n") != std::string::npos);
  CHECK(csv.find("0.33333333333333331,0.5,1.0000000000000001e-17\n") != std::string::npos);

  const auto svg = format_svg(pts, Domain{0, 2, 0, 1});
  CHECK(svg.find("viewBox=\"0 0 2 1\"") != std::string::npos);
  CHECK(svg.find("<circle cx=\"0.1\" cy=\"0.75\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("back_solve far from the curve") {
  const MultiPoly curve = parse_poly(oracle::read_data("final_resultant.poly"));
  // the curve polynomial is large here
  FloatAssignment at{};
  at[index_of(Var::x)] = 0.9;
  at[index_of(Var::y)] = 0.9;
  REQUIRE(std::fabs(eval_float(curve, at)) > 1);
  CHECK(back_solve(0.9, 0.9).tuples.empty());
}

TEST_CASE("back_solve on traced points finds common roots") {
  const MultiPoly curve = parse_poly(oracle::read_data("final_resultant.poly"));
  const auto pts = trace_curve(curve, 64, Domain{});
  REQUIRE(pts.size() > 10);
  const auto& r1 = equation(EquationTag::R1);
  const auto& r2 = equation(EquationTag::R2);
  std::size_t solved = 0;
  for (const auto& p : pts) {
    const auto res = back_solve(p.cx, p.cy);
    if (!res.tuples.empty()) ++solved;
    for (const auto& [t, report] : res.tuples) {
      const auto at = t.assignment();
      CHECK(scaled_residual(r1, at) <= 1e-8);
      CHECK(scaled_residual(r2, at) <= 1e-8);
      CHECK(t.w == t.x - t.u);
      CHECK(report.residuals.size() == 6);
      CHECK(std::fabs(eval_float(equation(EquationTag::Q1), at)) <= 1e-8 * (1 + std::fabs(t.v)));
    }
  }
  MESSAGE("back-solved " << solved << " of " << pts.size() << " traced points");
  CHECK(solved * 10 >= pts.size() * 9);
}

TEST_CASE("stage-one chain samples") {
  const auto s = sample_chain(stage1_chain(), 10, 7);
  REQUIRE(s.tuples.size() == 10);
  CHECK_FALSE(s.exhausted);
  const auto& p6 = pentagon_system()[5].poly;
  for (const auto& t : s.tuples) {
    const auto at = t.assignment();
    CHECK(std::fabs(t.w - (t.x - t.u)) <= 1e-14);
    CHECK(scaled_residual(p6, at) <= 1e-12);
    for (auto tag : {EquationTag::Q1, EquationTag::Q2, EquationTag::Q3})
      CHECK(scaled_residual(equation(tag), at) <= 1e-10);
    CHECK(t.x > 0);
    CHECK(t.x < 1);
  }
  // same seed, same tuples
  const auto again = sample_chain(stage1_chain(), 10, 7);
  for (std::size_t i = 0; i < 10; ++i) CHECK(again.tuples[i].u == s.tuples[i].u);
  CHECK_THROWS_AS(sample_chain(stage1_chain(), 0, 7), std::invalid_argument);
}

TEST_CASE("pentagon sampling comes back empty") {
  const auto s = sample_solutions(2, 7);
  CHECK(s.tuples.empty());
  CHECK(s.exhausted);
  CHECK(s.slices_tried == 4 * 2 + 40);
  CHECK(s.candidates > 0);
  CHECK(s.rejected_residual + s.rejected_side == s.candidates);
}
