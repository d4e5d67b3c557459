#include "xraypent/curve_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "xraypent/paper_system.hpp"

namespace xraypent {

double ParameterTuple::operator[](Var var) const {
  switch (var) {
    case Var::u: return u;
    case Var::v: return v;
    case Var::w: return w;
    case Var::x: return x;
    case Var::y: return y;
    case Var::z: return z;
  }
  return 0.0;
}

AdmissibleBox AdmissibleBox::unit() {
  AdmissibleBox box;
  box.bounds.fill({0.0, 1.0});
  return box;
}

double scaled_residual(const MultiPoly& p, const FloatAssignment& point) {
  double norm = 1.0;
  for (Var v : p.variables())
    if (const auto& slot = point[index_of(v)]) norm = std::max(norm, std::fabs(*slot));
  double coeff_sum = 0.0;
  for (const auto& t : p.terms()) coeff_sum += std::fabs(t.coefficient.get_d());
  const double deg = p.is_zero() ? 0.0 : static_cast<double>(p.total_degree().value());
  return std::fabs(eval_float(p, point)) / (1.0 + coeff_sum * std::pow(norm, deg));
}

double ValidationReport::max_scaled_residual() const {
  double m = 0.0;
  for (double r : scaled_residuals) m = std::max(m, r);
  return m;
}

double ValidationReport::min_side_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (double s : side_margins) m = std::min(m, s);
  return m;
}

bool ValidationReport::all_in_range() const {
  return std::all_of(in_range.begin(), in_range.end(), [](bool b) { return b; });
}

ValidationReport validate_against(const ParameterTuple& t, std::span<const MultiPoly> constraints,
                                  std::span<const MultiPoly> side_conditions, const AdmissibleBox& box) {
  const auto at = t.assignment();
  ValidationReport r;
  for (const auto& p : constraints) {
    r.residuals.push_back(std::fabs(eval_float(p, at)));
    r.scaled_residuals.push_back(scaled_residual(p, at));
  }
  for (const auto& s : side_conditions) r.side_margins.push_back(std::fabs(eval_float(s, at)));
  for (Var v : kAllVars) r.in_range[index_of(v)] = box.contains(v, t[v]);
  return r;
}

namespace {

struct PentagonLists {
  std::vector<MultiPoly> equations;
  std::vector<MultiPoly> sides;
};

const PentagonLists& pentagon_lists() {
  static const PentagonLists lists = [] {
    PentagonLists l;
    for (const auto& eq : pentagon_system()) {
      l.equations.push_back(eq.poly);
      for (const auto& s : eq.nonvanishing) l.sides.push_back(s);
    }
    return l;
  }();
  return lists;
}

Rational to_rational(double d) { return Rational(d); }

// Float coefficients (descending in var) of p at a point, leading zeros removed.
std::vector<double> float_coefficients(const std::vector<MultiPoly>& ascending, const FloatAssignment& at) {
  std::vector<double> out;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
    const double c = eval_float(*it, at);
    if (out.empty() && c == 0.0) continue;
    out.push_back(c);
  }
  return out;
}

double cauchy_bound(const std::vector<double>& desc) {
  double m = 0.0;
  for (std::size_t i = 1; i < desc.size(); ++i) m = std::max(m, std::fabs(desc[i] / desc[0]));
  return 1.0 + m;
}

struct Slice2 {
  MultiPoly f, g, fu, fy, gu, gy;
};

// Newton on (f, g) = 0 in (u, y) with x held fixed.
void polish(const Slice2& s, double x, double& u, double& y) {
  for (int it = 0; it < 12; ++it) {
    FloatAssignment at{};
    at[index_of(Var::u)] = u;
    at[index_of(Var::x)] = x;
    at[index_of(Var::y)] = y;
    const double f = eval_float(s.f, at), g = eval_float(s.g, at);
    const double a = eval_float(s.fu, at), b = eval_float(s.fy, at);
    const double c = eval_float(s.gu, at), d = eval_float(s.gy, at);
    const double det = a * d - b * c;
    if (det == 0.0 || !std::isfinite(det)) return;
    const double du = (f * d - b * g) / det;
    const double dy = (a * g - c * f) / det;
    if (!std::isfinite(du) || !std::isfinite(dy) || std::fabs(du) > 0.1 || std::fabs(dy) > 0.1) return;
    u -= du;
    y -= dy;
    if (std::fabs(du) + std::fabs(dy) < 1e-17) return;
  }
}

bool close(const ParameterTuple& a, const ParameterTuple& b) {
  for (Var v : kAllVars)
    if (std::fabs(a[v] - b[v]) > 1e-9) return false;
  return true;
}

}  // namespace

ValidationReport validate_tuple(const ParameterTuple& t, const AdmissibleBox& box) {
  const auto& lists = pentagon_lists();
  return validate_against(t, lists.equations, lists.sides, box);
}

SampleResult sample_chain(const ChainSpec& chain, int n, std::uint64_t seed, int max_slices) {
  if (n < 1) throw std::invalid_argument("sample_chain: n must be >= 1");
  if (max_slices <= 0) max_slices = 4 * n + 40;
  const auto [xlo, xhi] = chain.box.bounds[index_of(Var::x)];
  const auto [ylo, yhi] = chain.box.bounds[index_of(Var::y)];
  const auto [ulo, uhi] = chain.box.bounds[index_of(Var::u)];
  if (!std::isfinite(xlo) || !std::isfinite(xhi) || !std::isfinite(ylo) || !std::isfinite(yhi) ||
      !std::isfinite(ulo) || !std::isfinite(uhi))
    throw std::invalid_argument("sample_chain: u, x, y need finite bounds");

  const Slice2 s{chain.slice_f,
                 chain.slice_g,
                 chain.slice_f.derivative(Var::u),
                 chain.slice_f.derivative(Var::y),
                 chain.slice_g.derivative(Var::u),
                 chain.slice_g.derivative(Var::y)};
  const auto f_in_u = chain.slice_f.coefficients_in(Var::u);
  const MultiPoly& va = chain.v_solution.a_coef();
  const MultiPoly& vb = chain.v_solution.b_coef();

  std::mt19937_64 rng(seed);
  constexpr long kDen = 1L << 24;
  std::uniform_int_distribution<long> pick(1, kDen - 1);

  SampleResult out;
  for (int slice = 0; slice < max_slices && static_cast<int>(out.tuples.size()) < n; ++slice) {
    ++out.slices_tried;
    Rational step(pick(rng), kDen);
    step.canonicalize();
    const Rational xq = to_rational(xlo) + (to_rational(xhi) - to_rational(xlo)) * step;
    const double x = xq.get_d();
    const MultiPoly f = chain.slice_f.substitute_cleared(Var::x, xq);
    const MultiPoly g = chain.slice_g.substitute_cleared(Var::x, xq);
    if (!f.contains(Var::u) || !g.contains(Var::u)) continue;
    const MultiPoly r = resultant(f, g, Var::u).primitive_part();
    if (r.is_zero() || !r.contains(Var::y)) continue;

    for (double y0 : real_roots(scaled_coefficients(r, Var::y), ylo, yhi)) {
      FloatAssignment at{};
      at[index_of(Var::x)] = x;
      at[index_of(Var::y)] = y0;
      const auto desc = float_coefficients(f_in_u, at);
      if (desc.size() < 2) continue;
      for (double u0 : real_roots(desc, ulo, uhi)) {
        double u = u0, y = y0;
        polish(s, x, u, y);
        if (!(u > ulo && u < uhi && y > ylo && y < yhi)) continue;
        FloatAssignment p{};
        p[index_of(Var::u)] = u;
        p[index_of(Var::x)] = x;
        p[index_of(Var::y)] = y;
        if (std::max(scaled_residual(s.f, p), scaled_residual(s.g, p)) > 1e-9) continue;
        ++out.candidates;

        const double a = eval_float(va, p);
        const double w = x - u;
        if (std::fabs(a) < 1e-12 || std::fabs(w) < 1e-12) {
          ++out.rejected_side;
          continue;
        }
        ParameterTuple t;
        t.u = u;
        t.x = x;
        t.y = y;
        t.v = -eval_float(vb, p) / a;
        t.w = w;
        t.z = (y * u + t.v * w) / w;
        const auto report = validate_against(t, chain.constraints, chain.side_conditions, chain.box);
        const double res = report.max_scaled_residual();
        if (!(res <= chain.residual_tolerance)) {
          ++out.rejected_residual;
          if (!out.best_rejected_residual || res < *out.best_rejected_residual) out.best_rejected_residual = res;
          continue;
        }
        if (!(report.min_side_margin() >= chain.side_tolerance)) {
          ++out.rejected_side;
          continue;
        }
        if (std::any_of(out.tuples.begin(), out.tuples.end(), [&](const auto& o) { return close(o, t); })) continue;
        out.tuples.push_back(t);
        if (static_cast<int>(out.tuples.size()) >= n) break;
      }
      if (static_cast<int>(out.tuples.size()) >= n) break;
    }
  }
  out.exhausted = static_cast<int>(out.tuples.size()) < n;
  return out;
}

ChainSpec pentagon_chain() {
  const auto& lists = pentagon_lists();
  return ChainSpec{equation(EquationTag::R1), equation(EquationTag::R2), q1_v_solution(), lists.equations,
                   lists.sides};
}

ChainSpec stage1_chain() {
  const auto reduced = eliminate_v();
  const auto sol = q1_v_solution();
  ChainSpec c{reduced[0],
              reduced[1],
              sol,
              {equation(EquationTag::Q1), equation(EquationTag::Q2), equation(EquationTag::Q3)},
              {sol.a_coef()}};
  // Real points of the reduced system are sparse inside the unit box, so u
  // may leave it; y stays positive to keep clear of the y = 0 component.
  constexpr double inf = std::numeric_limits<double>::infinity();
  c.box.bounds[index_of(Var::u)] = {-2.0, 2.0};
  c.box.bounds[index_of(Var::v)] = {-inf, inf};
  c.box.bounds[index_of(Var::w)] = {-inf, inf};
  c.box.bounds[index_of(Var::z)] = {-inf, inf};
  return c;
}

SampleResult sample_solutions(int n, std::uint64_t seed) { return sample_chain(pentagon_chain(), n, seed); }

BackSolveResult back_solve(double cx, double cy, double tol) {
  BackSolveResult out;
  const auto& r1 = equation(EquationTag::R1);
  const auto& r2 = equation(EquationTag::R2);
  static const auto r1_in_u = r1.coefficients_in(Var::u);
  const auto sol = q1_v_solution();

  FloatAssignment at{};
  at[index_of(Var::x)] = cx;
  at[index_of(Var::y)] = cy;
  const auto desc = float_coefficients(r1_in_u, at);
  if (desc.size() < 2) {
    out.notes.push_back("R1 is constant in u at this point");
    return out;
  }
  const double bound = cauchy_bound(desc);
  for (double u : real_roots(desc, -bound, bound)) {
    FloatAssignment p = at;
    p[index_of(Var::u)] = u;
    if (scaled_residual(r2, p) > tol) continue;
    const double a = eval_float(sol.a_coef(), p);
    if (std::fabs(a) < 1e-12) {
      out.notes.push_back("u = " + std::to_string(u) + ": v-coefficient of Q1 vanishes, root skipped");
      continue;
    }
    ParameterTuple t;
    t.u = u;
    t.x = cx;
    t.y = cy;
    t.v = -eval_float(sol.b_coef(), p) / a;
    t.w = cx - u;
    if (std::fabs(t.w) < 1e-12) {
      out.notes.push_back("u = " + std::to_string(u) + ": w = x - u vanishes, root skipped");
      continue;
    }
    t.z = (cy * u + t.v * t.w) / t.w;
    out.tuples.emplace_back(t, validate_tuple(t));
  }
  return out;
}

}  // namespace xraypent
