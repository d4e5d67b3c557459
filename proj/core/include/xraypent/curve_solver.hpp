#pragma once

// Numeric layer over the exact polynomials: univariate real roots, sampling
// of solution chains, marching-squares tracing of a planar curve and
// back-solving parameter tuples at curve points.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xraypent/eliminate.hpp"
#include "xraypent/poly.hpp"

namespace xraypent {

struct ParameterTuple {
  double u = 0, v = 0, w = 0, x = 0, y = 0, z = 0;

  FloatAssignment assignment() const { return {u, v, w, x, y, z}; }
  double operator[](Var var) const;
};

/// Per-variable open intervals a tuple is expected to lie in.
struct AdmissibleBox {
  std::array<std::pair<double, double>, kVarCount> bounds;

  static AdmissibleBox unit();
  bool contains(Var v, double value) const { return bounds[index_of(v)].first < value && value < bounds[index_of(v)].second; }
};

/// |p(point)| / (1 + sum|c| * max(1, |point|_inf)^deg p), the norm taken over
/// the variables p actually contains.
double scaled_residual(const MultiPoly& p, const FloatAssignment& point);

/// Evaluation of a list of constraint polynomials (which must vanish) and
/// side-condition polynomials (which must not) at one tuple.
struct ValidationReport {
  std::vector<double> residuals;         // |p_i(t)|
  std::vector<double> scaled_residuals;  // scaled_residual(p_i, t)
  std::vector<double> side_margins;      // |s_j(t)|
  std::array<bool, kVarCount> in_range{};

  double max_scaled_residual() const;
  double min_side_margin() const;
  bool all_in_range() const;
};

ValidationReport validate_against(const ParameterTuple& t, std::span<const MultiPoly> constraints,
                                  std::span<const MultiPoly> side_conditions, const AdmissibleBox& box);
/// Against the six pentagon equations and their nine side conditions.
ValidationReport validate_tuple(const ParameterTuple& t, const AdmissibleBox& box = AdmissibleBox::unit());

/// Real roots in [lo, hi] of the polynomial with descending coefficients,
/// isolated through the critical points of its derivatives and refined by
/// bisection. Repeated roots are reported once. Throws std::invalid_argument
/// for a zero leading coefficient or lo >= hi.
std::vector<double> real_roots(std::span<const double> descending, double lo, double hi);

/// Descending binary64 coefficients of an integer univariate polynomial,
/// scaled by a common power of two so the largest has magnitude ~1.
std::vector<double> scaled_coefficients(const MultiPoly& univariate, Var var);

/// A chain (slice polynomials in u,x,y) -> (v linear) -> (w, z by the
/// pentagon substitutions), checked against `constraints`.
struct ChainSpec {
  MultiPoly slice_f;  // in u, x, y
  MultiPoly slice_g;  // in u, x, y
  LinearSolution v_solution;
  std::vector<MultiPoly> constraints;
  std::vector<MultiPoly> side_conditions;
  AdmissibleBox box = AdmissibleBox::unit();
  double residual_tolerance = 1e-10;
  double side_tolerance = 1e-6;
};

struct SampleResult {
  std::vector<ParameterTuple> tuples;
  int slices_tried = 0;
  int candidates = 0;
  int rejected_residual = 0;
  int rejected_side = 0;
  /// Smallest max-scaled-residual seen among rejected candidates.
  std::optional<double> best_rejected_residual;
  bool exhausted = false;  // attempt bound hit before n tuples were found
};

/// Draws x, solves {slice_f = slice_g = 0} for (y, u), then builds v, w, z.
SampleResult sample_chain(const ChainSpec& chain, int n, std::uint64_t seed, int max_slices = 0);

/// Chain for the pentagon system: slices R1/R2, v from Q1, checks P1..P6.
ChainSpec pentagon_chain();
/// Chain for the first-stage system {Q1, Q2, Q3}: slices are the computed
/// v-eliminants, checks Q1..Q3. Box: x, y in (0,1), u in (-2,2), v, w, z free.
ChainSpec stage1_chain();

SampleResult sample_solutions(int n, std::uint64_t seed);

// ---- tracing -------------------------------------------------------------------------

struct Domain {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
};

struct CurvePoint {
  double cx = 0, cy = 0;
  double residual = 0;
  std::pair<int, int> cell{0, 0};
};

/// Marching squares on the sign of poly(x, y) over a (grid+1)^2 lattice; one
/// point per crossed lattice edge, refined along the edge. Deterministic for
/// any worker count.
std::vector<CurvePoint> trace_curve(const MultiPoly& poly, int grid, const Domain& domain, unsigned workers = 0);

std::string format_csv(std::span<const CurvePoint> points);
std::string format_svg(std::span<const CurvePoint> points, const Domain& domain);

// ---- back-solving ----------------------------------------------------------------------

struct BackSolveResult {
  std::vector<std::pair<ParameterTuple, ValidationReport>> tuples;
  std::vector<std::string> notes;
};

/// Fixes (x, y), finds common real u-roots of R1 and R2, then v from Q1,
/// w = x - u, z from P6.
BackSolveResult back_solve(double cx, double cy, double tol = 1e-8);

}  // namespace xraypent
