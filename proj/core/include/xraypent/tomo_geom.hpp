#pragma once

// Exact convex-polygon tomography: chord-length functions (X-rays),
// Steiner symmetrals and X-ray equivalence.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xraypent/poly.hpp"

namespace xraypent {

struct Point2 {
  Rational px;
  Rational py;

  friend bool operator==(const Point2&, const Point2&) = default;
};

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Direction {
 public:
  /// Throws GeometryError for the zero vector.
  Direction(Rational dx, Rational dy);

  const Rational& dx() const noexcept { return dx_; }
  const Rational& dy() const noexcept { return dy_; }

  /// Offset coordinate s(P) = (P.d)/(d.d) along the direction.
  Rational along(const Point2& p) const;
  /// Offset coordinate t(P) = (P.n)/(n.n) across it, n = (-dy, dx).
  Rational across(const Point2& p) const;
  /// Inverse of (along, across).
  Point2 point_at(const Rational& s, const Rational& t) const;

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Rational dx_;
  Rational dy_;
};

class ConvexPolygon {
 public:
  const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  /// Same boundary cycle, regardless of the starting vertex.
  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b);

 private:
  friend ConvexPolygon validate_polygon(std::vector<Point2> points, bool allow_degenerate);
  explicit ConvexPolygon(std::vector<Point2> ccw) : vertices_(std::move(ccw)) {}
  std::vector<Point2> vertices_;
};

/// Accepts either orientation and returns the counterclockwise polygon.
/// Throws GeometryError for fewer than three points, repeated vertices, zero
/// area, nonconvex input, or collinear triples (unless allow_degenerate).
ConvexPolygon validate_polygon(std::vector<Point2> points, bool allow_degenerate = false);

/// Piecewise-linear chord extent f(t), zero outside [t_0, t_k]. Always
/// canonical: strictly increasing breakpoints with no removable breakpoint.
struct ChordFunction {
  std::vector<Rational> breakpoints;
  std::vector<Rational> values;

  /// Value inside the support (the closed interval); zero outside it.
  Rational at(const Rational& t) const;
  bool is_concave() const;
  bool is_canonical() const;

  friend bool operator==(const ChordFunction&, const ChordFunction&) = default;
};

ChordFunction chord_function(const ConvexPolygon& p, const Direction& d);
bool chord_functions_equal(const ChordFunction& a, const ChordFunction& b);
ConvexPolygon steiner_symmetral(const ConvexPolygon& p, const Direction& d);
/// Throws std::invalid_argument for an empty direction list.
bool xray_equivalent(const ConvexPolygon& p, const ConvexPolygon& q, std::span<const Direction> dirs);
Rational area(const ConvexPolygon& p);

ConvexPolygon translate(const ConvexPolygon& p, const Rational& dx, const Rational& dy);
/// Side-length test; exact for triangles (SSS). Requires equal vertex counts
/// to return true.
bool triangles_congruent(const ConvexPolygon& a, const ConvexPolygon& b);

class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AmbiguousTriangles {
  ConvexPolygon first;
  ConvexPolygon second;
  Direction first_direction;
  Direction second_direction;
  int attempts = 0;
};

/// Numeric search for two non-congruent triangles with equal X-rays in the
/// two coordinate directions, followed by rationalization and exact checks.
/// Throws SearchFailure if the bounded search finds nothing.
AmbiguousTriangles find_ambiguous_triangles(std::uint64_t seed, int max_attempts = 500);

// ---- polygon file format ----------------------------------------------------------

/// One "P/Q P/Q" vertex per line; '#' starts a comment. Throws ParseError.
std::vector<Point2> parse_polygon(std::string_view text);
std::string format_polygon(const ConvexPolygon& p);

}  // namespace xraypent
