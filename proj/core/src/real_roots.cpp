#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "xraypent/curve_solver.hpp"

namespace xraypent {

namespace {

using Poly = std::vector<long double>;  // descending

long double horner(const Poly& p, long double t) {
  long double acc = 0;
  for (long double c : p) acc = acc * t + c;
  return acc;
}

long double magnitude(const Poly& p, long double t) {
  long double acc = 0;
  const long double a = std::fabs(t);
  for (long double c : p) acc = acc * a + std::fabs(c);
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  const auto n = p.size() - 1;
  for (std::size_t i = 0; i < n; ++i) d.push_back(p[i] * static_cast<long double>(n - i));
  return d;
}

int sign(long double v) { return (v > 0) - (v < 0); }

// Root of a polynomial monotone on [a, b] with a sign change.
long double bisect(const Poly& p, long double a, long double b, int sa) {
  for (int i = 0; i < 200; ++i) {
    const long double m = a + (b - a) / 2;
    if (m <= a || m >= b) break;
    const int sm = sign(horner(p, m));
    if (sm == 0) return m;
    if (sm == sa) {
      a = m;
    } else {
      b = m;
    }
  }
  return a + (b - a) / 2;
}

// Roots of p in [lo, hi], ascending, found between consecutive critical points.
std::vector<long double> roots(const Poly& p, long double lo, long double hi) {
  if (p.size() <= 1) return {};
  if (p.size() == 2) {
    const long double r = -p[1] / p[0];
    if (r >= lo && r <= hi) return {r};
    return {};
  }
  std::vector<long double> knots{lo};
  for (long double c : roots(derivative(p), lo, hi))
    if (c > knots.back()) knots.push_back(c);
  if (hi > knots.back()) knots.push_back(hi);

  constexpr long double kTouch = 64 * std::numeric_limits<long double>::epsilon();
  std::vector<long double> out;
  auto push = [&](long double r) {
    if (out.empty() || r - out.back() > 1e-13L * std::max<long double>(1, std::fabs(r))) out.push_back(r);
  };
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const long double a = knots[i];
    const long double fa = horner(p, a);
    // Critical points where p touches zero are (even-multiplicity) roots.
    if (std::fabs(fa) <= kTouch * magnitude(p, a)) push(a);
    if (i + 1 == knots.size()) break;
    const long double b = knots[i + 1];
    const long double fb = horner(p, b);
    const int sa = sign(fa), sb = sign(fb);
    if (sa != 0 && sb != 0 && sa != sb) push(bisect(p, a, b, sa));
  }
  return out;
}

}  // namespace

std::vector<double> real_roots(std::span<const double> descending, double lo, double hi) {
  if (descending.empty() || descending.front() == 0.0)
    throw std::invalid_argument("real_roots: leading coefficient must be nonzero");
  if (!(lo < hi)) throw std::invalid_argument("real_roots: empty interval");
  Poly p(descending.begin(), descending.end());
  std::vector<double> out;
  for (long double r : roots(p, lo, hi)) {
    const double d = static_cast<double>(r);
    if (out.empty() || d - out.back() > 1e-12 * std::max(1.0, std::fabs(d))) out.push_back(d);
  }
  return out;
}

std::vector<double> scaled_coefficients(const MultiPoly& univariate, Var var) {
  for (Var v : kAllVars)
    if (v != var && univariate.contains(v))
      throw std::invalid_argument("scaled_coefficients: polynomial is not univariate");
  if (univariate.is_zero()) return {};
  const auto n = univariate.degree_in(var).value();
  std::vector<Integer> coeffs(n + 1);
  for (const auto& t : univariate.terms()) coeffs[n - t.monomial[var]] = t.coefficient;
  long top = 0;
  for (const auto& c : coeffs)
    if (c != 0) top = std::max<long>(top, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (c == 0) {
      out.push_back(0.0);
      continue;
    }
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, c.get_mpz_t());
    out.push_back(std::ldexp(mant, static_cast<int>(exp - top)));
  }
  return out;
}

}  // namespace xraypent
