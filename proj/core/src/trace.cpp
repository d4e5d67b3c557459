#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "xraypent/curve_solver.hpp"

namespace xraypent {

namespace {

// Dense bivariate Horner form: rows[i] holds the y-coefficients (ascending)
// of x^i.
class Bivariate {
 public:
  explicit Bivariate(const MultiPoly& p) {
    for (Var v : p.variables())
      if (v != Var::x && v != Var::y) throw std::invalid_argument("trace_curve: polynomial must be in x and y only");
    const auto dx = p.degree_in(Var::x).value();
    const auto dy = p.degree_in(Var::y).value();
    rows_.assign(dx + 1, std::vector<long double>(dy + 1, 0.0L));
    for (const auto& t : p.terms()) {
      long e = 0;
      const long double m = mpz_get_d_2exp(&e, t.coefficient.get_mpz_t());
      const long double c = std::ldexp(m, static_cast<int>(e));
      rows_[t.monomial[Var::x]][t.monomial[Var::y]] = c;
      abs_sum_ += std::fabs(c);
    }
    degree_ = p.total_degree().value();
  }

  long double operator()(long double x, long double y) const {
    long double acc = 0;
    for (auto row = rows_.rbegin(); row != rows_.rend(); ++row) {
      long double inner = 0;
      for (auto c = row->rbegin(); c != row->rend(); ++c) inner = inner * y + *c;
      acc = acc * x + inner;
    }
    return acc;
  }

  double scaled(long double value, double x, double y) const {
    const double norm = std::max({1.0, std::fabs(x), std::fabs(y)});
    return static_cast<double>(std::fabs(value) / (1.0L + abs_sum_ * std::pow(static_cast<long double>(norm), degree_)));
  }

 private:
  std::vector<std::vector<long double>> rows_;
  long double abs_sum_ = 0;
  unsigned degree_ = 0;
};

// Exact zeros count as positive, so a lattice point on the curve never
// produces a crossing on both of its edges.
bool positive(long double v) { return v >= 0; }

CurvePoint refine(const Bivariate& f, double xa, double ya, double xb, double yb, std::pair<int, int> cell) {
  long double fa = f(xa, ya);
  const bool sa = positive(fa);
  long double lo = 0, hi = 1;
  for (int i = 0; i < 64; ++i) {
    const long double mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    const long double v = f(xa + mid * (xb - xa), ya + mid * (yb - ya));
    if (positive(v) == sa) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const long double t = (lo + hi) / 2;
  CurvePoint p;
  p.cx = static_cast<double>(xa + t * (xb - xa));
  p.cy = static_cast<double>(ya + t * (yb - ya));
  p.residual = f.scaled(f(p.cx, p.cy), p.cx, p.cy);
  p.cell = cell;
  return p;
}

}  // namespace

std::vector<CurvePoint> trace_curve(const MultiPoly& poly, int grid, const Domain& domain, unsigned workers) {
  if (grid < 2) throw std::invalid_argument("trace_curve: grid must be >= 2");
  if (!(domain.x0 < domain.x1) || !(domain.y0 < domain.y1)) throw std::invalid_argument("trace_curve: empty domain");
  if (poly.is_zero()) throw std::invalid_argument("trace_curve: zero polynomial");
  const Bivariate f(poly);
  const auto n = static_cast<std::size_t>(grid) + 1;
  auto xs = [&](std::size_t i) { return domain.x0 + (domain.x1 - domain.x0) * static_cast<double>(i) / grid; };
  auto ys = [&](std::size_t j) { return domain.y0 + (domain.y1 - domain.y0) * static_cast<double>(j) / grid; };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

  // Each lattice row j is owned by one worker; results are merged by row.
  auto parallel_rows = [&](std::size_t rows, auto&& body) {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t j = w; j < rows; j += workers) body(j);
      });
    for (auto& t : pool) t.join();
  };

  std::vector<char> sign(n * n);
  parallel_rows(n, [&](std::size_t j) {
    for (std::size_t i = 0; i < n; ++i) sign[j * n + i] = positive(f(xs(i), ys(j)));
  });

  const int last = grid - 1;
  std::vector<std::vector<CurvePoint>> per_row(n);
  parallel_rows(n, [&](std::size_t j) {
    auto& out = per_row[j];
    const int cj = std::min(static_cast<int>(j), last);
    for (std::size_t i = 0; i < n; ++i) {
      const int ci = std::min(static_cast<int>(i), last);
      if (i + 1 < n && sign[j * n + i] != sign[j * n + i + 1])
        out.push_back(refine(f, xs(i), ys(j), xs(i + 1), ys(j), {static_cast<int>(i), cj}));
      if (j + 1 < n && sign[j * n + i] != sign[(j + 1) * n + i])
        out.push_back(refine(f, xs(i), ys(j), xs(i), ys(j + 1), {ci, static_cast<int>(j)}));
    }
  });

  std::vector<CurvePoint> points;
  for (auto& row : per_row) points.insert(points.end(), row.begin(), row.end());
  std::stable_sort(points.begin(), points.end(), [](const CurvePoint& a, const CurvePoint& b) {
    if (a.cell != b.cell) return a.cell < b.cell;
    if (a.cx != b.cx) return a.cx < b.cx;
    return a.cy < b.cy;
  });
  return points;
}

std::string format_csv(std::span<const CurvePoint> points) {
  std::string out = "x,y,residual\n";
  char buf[96];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.cx, p.cy, p.residual);
    out += buf;
  }
  return out;
}

std::string format_svg(std::span<const CurvePoint> points, const Domain& d) {
  const double w = d.x1 - d.x0, h = d.y1 - d.y0;
  const double r = std::max(w, h) / 800.0;
  char buf[320];
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.17g %.17g %.17g %.17g\" "
                "width=\"800\" height=\"800\">\n",
                d.x0, d.y0, w, h);
  out += buf;
  std::snprintf(buf, sizeof buf,
                "<rect x=\"%.17g\" y=\"%.17g\" width=\"%.17g\" height=\"%.17g\" fill=\"white\" stroke=\"gray\" "
                "stroke-width=\"%.6g\"/>\n",
                d.x0, d.y0, w, h, r / 2);
  out += buf;
  // SVG y grows downward; mirror so the plot reads with y up.
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.9g\" cy=\"%.9g\" r=\"%.6g\" fill=\"black\"/>\n", p.cx,
                  d.y0 + d.y1 - p.cy, r);
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace xraypent
