#pragma once

// Independent reference implementations used only by the tests.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "xraypent/eliminate.hpp"
#include "xraypent/poly.hpp"
#include "xraypent/tomo_geom.hpp"

namespace oracle {

using xraypent::Integer;
using xraypent::MultiPoly;
using xraypent::Rational;
using xraypent::Var;

/// Laplace expansion along the first row.
MultiPoly cofactor_det(const xraypent::PolyMatrix& m);

/// Random polynomial in `vars` with at most `terms` terms, each exponent in
/// [0, max_exp] and coefficients in [-bound, bound].
MultiPoly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int terms, unsigned max_exp, long bound);

/// Random polynomial of exact degree `deg` in `main`, coefficients random in
/// `others` (possibly none). The leading coefficient is a nonzero constant
/// when lc_constant is set.
MultiPoly random_in(std::mt19937_64& rng, Var main, unsigned deg, const std::vector<Var>& others, unsigned max_exp,
                    long bound, bool lc_constant = false);

/// Real eigenvalues of the companion matrix (descending coefficients) inside
/// [lo, hi], ascending; imaginary parts up to imag_tol count as real.
std::vector<double> companion_real_roots(const std::vector<double>& descending, double lo, double hi,
                                         double imag_tol = 1e-7);

/// Convex hull (counterclockwise, no collinear points) by monotone chain.
std::vector<xraypent::Point2> convex_hull(std::vector<xraypent::Point2> pts);

/// Random convex polygon: hull of `points` random rationals with denominators
/// up to max_den in [-range, range]^2. Retries until at least 3 vertices.
xraypent::ConvexPolygon random_convex_polygon(std::mt19937_64& rng, int points, long range, long max_den);

xraypent::Direction random_direction(std::mt19937_64& rng, long bound);

std::string read_data(const std::string& name);

/// Fresh empty directory under the system temp dir.
std::filesystem::path temp_dir(const std::string& tag);

}  // namespace oracle
