#include "xraypent/tomo_geom.hpp"

#include <algorithm>
#include <sstream>

namespace xraypent {

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.px - o.px) * (b.py - o.py) - (a.py - o.py) * (b.px - o.px);
}

Rational twice_signed_area(const std::vector<Point2>& pts) {
  Rational s = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % pts.size()];
    s += a.px * b.py - a.py * b.px;
  }
  return s;
}

}  // namespace

// ---- Direction ------------------------------------------------------------------

Direction::Direction(Rational dx, Rational dy) : dx_(std::move(dx)), dy_(std::move(dy)) {
  dx_.canonicalize();
  dy_.canonicalize();
  if (dx_ == 0 && dy_ == 0) throw GeometryError("direction must be nonzero");
}

Rational Direction::along(const Point2& p) const {
  return (p.px * dx_ + p.py * dy_) / (dx_ * dx_ + dy_ * dy_);
}

Rational Direction::across(const Point2& p) const {
  return (-p.px * dy_ + p.py * dx_) / (dx_ * dx_ + dy_ * dy_);
}

Point2 Direction::point_at(const Rational& s, const Rational& t) const {
  // P = s*d + t*n with n = (-dy, dx).
  return Point2{s * dx_ - t * dy_, s * dy_ + t * dx_};
}

// ---- ConvexPolygon ---------------------------------------------------------------

bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
  const auto n = a.vertices_.size();
  if (n != b.vertices_.size()) return false;
  auto start = std::find(b.vertices_.begin(), b.vertices_.end(), a.vertices_.front());
  if (start == b.vertices_.end()) return false;
  const auto offset = static_cast<std::size_t>(start - b.vertices_.begin());
  for (std::size_t i = 0; i < n; ++i)
    if (!(a.vertices_[i] == b.vertices_[(i + offset) % n])) return false;
  return true;
}

ConvexPolygon validate_polygon(std::vector<Point2> points, bool allow_degenerate) {
  const auto n = points.size();
  if (n < 3) throw GeometryError("polygon needs at least 3 vertices");
  for (auto& p : points) {
    p.px.canonicalize();
    p.py.canonicalize();
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i] == points[j]) throw GeometryError("repeated vertex");
  const Rational twice_area = twice_signed_area(points);
  if (twice_area == 0) throw GeometryError("polygon has zero area");
  if (twice_area < 0) std::reverse(points.begin(), points.end());

  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = points[i];
    const auto& b = points[(i + 1) % n];
    const auto& c = points[(i + 2) % n];
    int turn = sgn(cross(a, b, c));
    if (turn < 0) throw GeometryError("polygon is not convex");
    if (turn == 0 && !allow_degenerate) throw GeometryError("collinear vertex triple");
  }
  // Every vertex must lie on the inner side of every edge; this rejects
  // star-shaped windings whose local turns all agree.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = points[i];
    const auto& b = points[(i + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (sgn(cross(a, b, points[j])) < 0) throw GeometryError("polygon is not convex");
    }
  }
  return ConvexPolygon(std::move(points));
}

Rational area(const ConvexPolygon& p) { return twice_signed_area(p.vertices()) / 2; }

ConvexPolygon translate(const ConvexPolygon& p, const Rational& dx, const Rational& dy) {
  std::vector<Point2> moved;
  moved.reserve(p.size());
  for (const auto& v : p.vertices()) moved.push_back(Point2{v.px + dx, v.py + dy});
  return validate_polygon(std::move(moved), true);
}

bool triangles_congruent(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.size() != b.size()) return false;
  auto sides = [](const ConvexPolygon& p) {
    std::vector<Rational> out;
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& s = v[i];
      const auto& t = v[(i + 1) % v.size()];
      out.push_back((s.px - t.px) * (s.px - t.px) + (s.py - t.py) * (s.py - t.py));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return sides(a) == sides(b);
}

// ---- chord functions ---------------------------------------------------------------

Rational ChordFunction::at(const Rational& t) const {
  if (breakpoints.empty() || t < breakpoints.front() || t > breakpoints.back()) return 0;
  auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), t);
  auto i = static_cast<std::size_t>(it - breakpoints.begin());
  if (breakpoints[i] == t) return values[i];
  const auto& t0 = breakpoints[i - 1];
  const auto& t1 = breakpoints[i];
  return values[i - 1] + (values[i] - values[i - 1]) * (t - t0) / (t1 - t0);
}

bool ChordFunction::is_concave() const {
  for (std::size_t i = 1; i + 1 < breakpoints.size(); ++i) {
    Rational left = (values[i] - values[i - 1]) / (breakpoints[i] - breakpoints[i - 1]);
    Rational right = (values[i + 1] - values[i]) / (breakpoints[i + 1] - breakpoints[i]);
    if (right > left) return false;
  }
  return true;
}

bool ChordFunction::is_canonical() const {
  if (breakpoints.size() != values.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < 0) return false;
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i - 1] < breakpoints[i])) return false;
  for (std::size_t i = 1; i + 1 < breakpoints.size(); ++i) {
    Rational left = (values[i] - values[i - 1]) / (breakpoints[i] - breakpoints[i - 1]);
    Rational right = (values[i + 1] - values[i]) / (breakpoints[i + 1] - breakpoints[i]);
    if (left == right) return false;
  }
  return true;
}

ChordFunction chord_function(const ConvexPolygon& p, const Direction& d) {
  struct Local {
    Rational s, t;
  };
  std::vector<Local> local;
  local.reserve(p.size());
  for (const auto& v : p.vertices()) local.push_back(Local{d.along(v), d.across(v)});

  std::vector<Rational> levels;
  for (const auto& l : local) levels.push_back(l.t);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<Rational> extents;
  extents.reserve(levels.size());
  for (const auto& level : levels) {
    bool any = false;
    Rational lo, hi;
    auto take = [&](const Rational& s) {
      if (!any) {
        lo = hi = s;
        any = true;
      } else {
        if (s < lo) lo = s;
        if (s > hi) hi = s;
      }
    };
    for (std::size_t i = 0; i < local.size(); ++i) {
      const auto& a = local[i];
      const auto& b = local[(i + 1) % local.size()];
      if (a.t == level) take(a.s);
      if (b.t == level) take(b.s);
      if ((a.t < level && level < b.t) || (b.t < level && level < a.t))
        take(a.s + (level - a.t) * (b.s - a.s) / (b.t - a.t));
    }
    extents.push_back(hi - lo);
  }

  // Drop breakpoints where the function continues linearly.
  ChordFunction f;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (f.breakpoints.size() >= 1 && i + 1 < levels.size()) {
      const auto& tp = f.breakpoints.back();
      const auto& vp = f.values.back();
      Rational left = (extents[i] - vp) / (levels[i] - tp);
      Rational right = (extents[i + 1] - extents[i]) / (levels[i + 1] - levels[i]);
      if (left == right) continue;
    }
    f.breakpoints.push_back(levels[i]);
    f.values.push_back(extents[i]);
  }
  return f;
}

bool chord_functions_equal(const ChordFunction& a, const ChordFunction& b) { return a == b; }

ConvexPolygon steiner_symmetral(const ConvexPolygon& p, const Direction& d) {
  const ChordFunction f = chord_function(p, d);
  std::vector<Point2> ring;
  const auto k = f.breakpoints.size();
  // Right boundary upward, then left boundary downward: counterclockwise in
  // the right-handed (s, t) frame.
  for (std::size_t i = 0; i < k; ++i) ring.push_back(d.point_at(f.values[i] / 2, f.breakpoints[i]));
  for (std::size_t i = k; i-- > 0;)
    if (f.values[i] != 0) ring.push_back(d.point_at(-f.values[i] / 2, f.breakpoints[i]));
  return validate_polygon(std::move(ring));
}

bool xray_equivalent(const ConvexPolygon& p, const ConvexPolygon& q, std::span<const Direction> dirs) {
  if (dirs.empty()) throw std::invalid_argument("xray_equivalent needs at least one direction");
  return std::all_of(dirs.begin(), dirs.end(), [&](const Direction& d) {
    return chord_functions_equal(chord_function(p, d), chord_function(q, d));
  });
}

// ---- file format ----------------------------------------------------------------------

std::vector<Point2> parse_polygon(std::string_view text) {
  std::vector<Point2> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra))
      throw ParseError("line " + std::to_string(line_no) + ": expected two coordinates", line_no);
    try {
      out.push_back(Point2{parse_rational(a), parse_rational(b)});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return out;
}

std::string format_polygon(const ConvexPolygon& p) {
  std::string out;
  for (const auto& v : p.vertices()) {
    out += format_rational(v.px);
    out += ' ';
    out += format_rational(v.py);
    out += '\n';
  }
  return out;
}

}  // namespace xraypent
