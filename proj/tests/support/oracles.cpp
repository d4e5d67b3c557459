#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace oracle {

using namespace xraypent;

MultiPoly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  MultiPoly total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    MultiPoly term = m(0, c) * cofactor_det(minor);
    if (c % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int terms, unsigned max_exp, long bound) {
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  MultiPoly p;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (Var v : vars) m = m.with(v, exp(rng));
    p += MultiPoly::monomial(m, Integer(coeff(rng)));
  }
  return p;
}

MultiPoly random_in(std::mt19937_64& rng, Var main, unsigned deg, const std::vector<Var>& others, unsigned max_exp,
                    long bound, bool lc_constant) {
  std::uniform_int_distribution<long> coeff(1, bound);
  std::bernoulli_distribution flip(0.5);
  MultiPoly p;
  for (unsigned k = 0; k <= deg; ++k) {
    MultiPoly c = (k == deg && lc_constant) ? MultiPoly() : random_poly(rng, others, 2, max_exp, bound);
    if (k == deg && c.is_zero()) c = MultiPoly(Integer(flip(rng) ? coeff(rng) : -coeff(rng)));
    p += c * MultiPoly::monomial(Monomial::of(main, k), Integer(1));
  }
  return p;
}

std::vector<double> companion_real_roots(const std::vector<double>& desc, double lo, double hi, double imag_tol) {
  const auto n = desc.size() - 1;
  if (n == 0) return {};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) c(0, static_cast<Eigen::Index>(i)) = -desc[i + 1] / desc[0];
  for (std::size_t i = 1; i < n; ++i) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
  std::vector<double> out;
  for (const auto& ev : solver.eigenvalues())
    if (std::abs(ev.imag()) <= imag_tol && ev.real() >= lo && ev.real() <= hi) out.push_back(ev.real());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.px < b.px || (a.px == b.px && a.py < b.py);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const Point2& o, const Point2& a, const Point2& b) -> Rational {
    return (a.px - o.px) * (b.py - o.py) - (a.py - o.py) * (b.px - o.px);
  };
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

ConvexPolygon random_convex_polygon(std::mt19937_64& rng, int points, long range, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  for (;;) {
    std::vector<Point2> pts;
    for (int i = 0; i < points; ++i) {
      const long d1 = den(rng), d2 = den(rng);
      std::uniform_int_distribution<long> n1(-range * d1, range * d1), n2(-range * d2, range * d2);
      Rational a(n1(rng), d1), b(n2(rng), d2);
      a.canonicalize();
      b.canonicalize();
      pts.push_back(Point2{a, b});
    }
    auto hull = convex_hull(std::move(pts));
    if (hull.size() >= 3) return validate_polygon(std::move(hull));
  }
}

Direction random_direction(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  for (;;) {
    const long a = c(rng), b = c(rng);
    if (a != 0 || b != 0) return Direction(Rational(a), Rational(b));
  }
}

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(XRAYPENT_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto dir = std::filesystem::temp_directory_path() /
             ("xraypent-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace oracle
