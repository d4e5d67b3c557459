#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>

#include "xraypent/tomo_geom.hpp"

namespace xraypent {

namespace {

// Triangles on a 3x3 grid: x-coordinates {0, a, 1}, y-coordinates {0, b, 1}.
// Vertex i of a triangle sits on row i at column perm[i], so any two such
// triangles share both coordinate projections.
using Perm = std::array<int, 3>;

struct GridPoint {
  double x, y;
};

std::array<GridPoint, 3> grid_triangle(const Perm& perm, double a, double b) {
  const double xs[3] = {0.0, a, 1.0};
  const double ys[3] = {0.0, b, 1.0};
  return {GridPoint{xs[perm[0]], ys[0]}, GridPoint{xs[perm[1]], ys[1]}, GridPoint{xs[perm[2]], ys[2]}};
}

// Length of the chord through the middle vertex, measured along the x axis
// (horizontal) or the y axis (vertical).
double mid_chord(std::array<GridPoint, 3> t, bool horizontal) {
  if (!horizontal)
    for (auto& p : t) std::swap(p.x, p.y);
  std::sort(t.begin(), t.end(), [](const GridPoint& l, const GridPoint& r) { return l.y < r.y; });
  const double span = t[2].y - t[0].y;
  if (span == 0.0) return 0.0;
  const double edge_x = t[0].x + (t[1].y - t[0].y) / span * (t[2].x - t[0].x);
  return std::fabs(t[1].x - edge_x);
}

std::array<double, 2> residual(const Perm& p1, const Perm& p2, double a, double b) {
  auto t1 = grid_triangle(p1, a, b);
  auto t2 = grid_triangle(p2, a, b);
  return {mid_chord(t1, true) - mid_chord(t2, true), mid_chord(t1, false) - mid_chord(t2, false)};
}

double norm(const std::array<double, 2>& r) { return std::hypot(r[0], r[1]); }

// Levenberg-Marquardt on the 2x2 residual; `free_a_only` pins b.
std::optional<std::array<double, 2>> solve(const Perm& p1, const Perm& p2, double a, double b, bool free_a_only) {
  double lambda = 1e-3;
  auto r = residual(p1, p2, a, b);
  for (int iter = 0; iter < 200 && norm(r) > 1e-14; ++iter) {
    const double h = 1e-7;
    auto ra = residual(p1, p2, a + h, b);
    auto rb = residual(p1, p2, a, b + h);
    const double ja[2] = {(ra[0] - r[0]) / h, (ra[1] - r[1]) / h};
    const double jb[2] = {(rb[0] - r[0]) / h, (rb[1] - r[1]) / h};
    double da = 0, db = 0;
    if (free_a_only) {
      const double jtj = ja[0] * ja[0] + ja[1] * ja[1];
      da = -(ja[0] * r[0] + ja[1] * r[1]) / (jtj * (1 + lambda) + 1e-300);
    } else {
      // (J^T J + lambda diag) delta = -J^T r
      double m00 = ja[0] * ja[0] + ja[1] * ja[1];
      double m11 = jb[0] * jb[0] + jb[1] * jb[1];
      const double m01 = ja[0] * jb[0] + ja[1] * jb[1];
      m00 += lambda * (m00 + 1e-12);
      m11 += lambda * (m11 + 1e-12);
      const double g0 = -(ja[0] * r[0] + ja[1] * r[1]);
      const double g1 = -(jb[0] * r[0] + jb[1] * r[1]);
      const double det = m00 * m11 - m01 * m01;
      if (det == 0.0) return std::nullopt;
      da = (g0 * m11 - g1 * m01) / det;
      db = (m00 * g1 - m01 * g0) / det;
    }
    auto trial = residual(p1, p2, a + da, b + db);
    if (norm(trial) < norm(r)) {
      a += da;
      b += db;
      r = trial;
      lambda = std::max(lambda / 4, 1e-12);
    } else {
      lambda *= 8;
      if (lambda > 1e12) break;
    }
  }
  if (norm(r) > 1e-12) return std::nullopt;
  return std::array<double, 2>{a, b};
}

/// Continued-fraction convergent of x with denominator at most max_den that
/// lies within tol of x.
std::optional<Rational> rationalize(double x, long max_den, double tol) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double frac = x;
  for (int i = 0; i < 64; ++i) {
    const double ai = std::floor(frac);
    if (std::fabs(ai) > 1e12) break;
    const long a = static_cast<long>(ai);
    const long h2 = a * h1 + h0;
    const long k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::fabs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
      Rational q(h1, k1);
      q.canonicalize();
      return q;
    }
    const double rest = frac - ai;
    if (rest == 0.0) break;
    frac = 1.0 / rest;
  }
  return std::nullopt;
}

std::optional<ConvexPolygon> exact_triangle(const Perm& perm, const Rational& a, const Rational& b) {
  const Rational xs[3] = {Rational(0), a, Rational(1)};
  const Rational ys[3] = {Rational(0), b, Rational(1)};
  std::vector<Point2> pts;
  for (int i = 0; i < 3; ++i) pts.push_back(Point2{xs[perm[i]], ys[i]});
  try {
    return validate_polygon(std::move(pts));
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

}  // namespace

AmbiguousTriangles find_ambiguous_triangles(std::uint64_t seed, int max_attempts) {
  std::mt19937_64 rng(seed);
  std::array<Perm, 6> perms{Perm{0, 1, 2}, Perm{0, 2, 1}, Perm{1, 0, 2}, Perm{1, 2, 0}, Perm{2, 0, 1}, Perm{2, 1, 0}};
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_real_distribution<double> start(0.05, 0.95);
  const std::array<Direction, 2> dirs{Direction(1, 0), Direction(0, 1)};

  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    const Perm& p1 = perms[static_cast<std::size_t>(pick(rng))];
    const Perm& p2 = perms[static_cast<std::size_t>(pick(rng))];
    const double a0 = start(rng);
    const double b0 = start(rng);
    if (p1 == p2) continue;
    auto sol = solve(p1, p2, a0, b0, false);
    if (!sol) continue;
    auto [a, b] = *sol;
    if (!(a > 0.02 && a < 0.98 && b > 0.02 && b < 0.98)) continue;

    // Snap b to a short fraction, re-solve for a, then recover a exactly.
    auto bq = rationalize(b, 64, 0.02);
    if (!bq) continue;
    auto refit = solve(p1, p2, a, bq->get_d(), true);
    if (!refit) continue;
    auto aq = rationalize((*refit)[0], 1'000'000, 1e-11);
    if (!aq || *aq <= 0 || *aq >= 1 || *bq <= 0 || *bq >= 1) continue;

    auto first = exact_triangle(p1, *aq, *bq);
    auto second = exact_triangle(p2, *aq, *bq);
    if (!first || !second) continue;
    if (!xray_equivalent(*first, *second, dirs)) continue;
    if (triangles_congruent(*first, *second)) continue;
    return AmbiguousTriangles{*first, *second, dirs[0], dirs[1], attempt};
  }
  throw SearchFailure("no ambiguous triangle pair found within " + std::to_string(max_attempts) + " attempts");
}

}  // namespace xraypent
