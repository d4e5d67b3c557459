#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "xraypent/cache.hpp"
#include "xraypent/curve_solver.hpp"
#include "xraypent/paper_system.hpp"
#include "xraypent/tomo_geom.hpp"

namespace xraypent::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(trim(text));
  } catch (const ParseError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

Direction direction_arg(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("direction must be DX,DY: '" + text + "'");
  try {
    return Direction(rational_arg(parts[0], "direction"), rational_arg(parts[1], "direction"));
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
}

ConvexPolygon polygon_file(const std::string& path) {
  auto text = read_file(path);
  if (!text) throw UsageError("cannot read polygon file " + path);
  try {
    return validate_polygon(parse_polygon(*text));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const GeometryError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::string& data, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << data;
  } else {
    atomic_write(out_path, data);
  }
}

std::string fmt(double v, const char* spec = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string chord_text(const ChordFunction& f) {
  std::string s;
  for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
    if (i) s += ' ';
    s += "(" + format_rational(f.breakpoints[i]) + ", " + format_rational(f.values[i]) + ")";
  }
  return s;
}

std::string direction_text(const Direction& d) { return format_rational(d.dx()) + "," + format_rational(d.dy()); }

std::string term_text(const Term& t) { return format_poly(MultiPoly::monomial(t.monomial, t.coefficient)); }

// ---- subcommands -------------------------------------------------------------------

void print_comparison(std::ostream& out, int stage, const StageComparison& c) {
  out << std::left << std::setw(6) << stage << std::setw(8) << c.claimed << std::setw(10) << c.computed;
  if (c.report) {
    out << std::setw(19) << relation_name(c.report->relation) << std::setw(9) << c.report->samples_used
        << std::setw(13) << (c.report->samples_used ? fmt(c.report->max_residual) : std::string("-"))
        << c.report->detail;
  } else {
    out << std::setw(19) << "SAMPLING_FAILURE" << std::setw(9) << 0 << std::setw(13) << "-" << *c.failure;
  }
  out << '\n';
}

int verify_system_cmd(int samples, std::uint64_t seed, std::ostream& out) {
  if (samples < 1) throw UsageError("--samples must be >= 1");
  const auto summary = verify_system(samples, seed);
  out << std::left << std::setw(6) << "stage" << std::setw(8) << "claimed" << std::setw(10) << "computed"
      << std::setw(19) << "relation" << std::setw(9) << "samples" << std::setw(13) << "max_residual"
      << "detail\n";
  for (const auto& c : summary.stage1) print_comparison(out, 1, c);
  for (const auto& c : summary.stage2) print_comparison(out, 2, c);
  const auto& s = summary.stage1_sampling;
  out << "stage-1 samples: " << summary.stage1_samples << " of " << samples << " (slices " << s.slices_tried
      << ", candidates " << s.candidates << ", rejected by residual " << s.rejected_residual
      << ", rejected by side condition " << s.rejected_side;
  if (s.best_rejected_residual) out << ", best rejected residual " << fmt(*s.best_rejected_residual);
  out << ")\n";
  if (summary.stage1_samples > 0) out << "zw-eliminant max residual: " << fmt(summary.eliminant_max_residual) << '\n';
  out << "result: " << (summary.passed() ? "PASS" : "FAIL") << '\n';
  return summary.passed() ? kOk : kVerificationFailed;
}

int eliminate_cmd(const std::string& stage, const std::string& out_path, std::ostream& out) {
  std::vector<MultiPoly> polys;
  if (stage == "zw") {
    polys = eliminate_zw();
  } else if (stage == "v") {
    polys = eliminate_v();
  } else {
    throw UsageError("--stage must be zw or v");
  }
  std::string data;
  for (const auto& p : polys) data += format_poly(p) + "\n";
  emit(data, out_path, out);
  return kOk;
}

int resultant_cmd(const std::filesystem::path& cache, const std::string& out_path, bool check_leading,
                  const std::string& backend, unsigned workers, std::ostream& out) {
  const auto b = backend_from_name(backend);
  if (!b) throw UsageError("unknown backend '" + backend + "' (auto, bareiss, evalinterp)");
  const MultiPoly curve = final_resultant(cache, DetOptions{*b, workers});
  if (!check_leading) {
    emit(format_poly(curve) + "\n", out_path, out);
    return kOk;
  }
  if (!out_path.empty()) atomic_write(out_path, format_poly(curve) + "\n");
  const auto report = check_first_term(curve);
  out << "terms: " << curve.term_count() << ", deg_x " << curve.degree_in(Var::x).value() << ", deg_y "
      << curve.degree_in(Var::y).value() << ", total degree " << curve.total_degree().value() << '\n';
  out << "coefficient of x^42*y^34: " << report.coefficient << '\n';
  for (const auto& [name, term] : report.leading_terms) out << "leading term " << name << ": " << term_text(term) << '\n';
  for (const auto& [name, term] : report.diagonal_terms)
    out << "Sylvester diagonal " << name << ": " << term_text(term) << '\n';
  out << (report.matches ? "PASS" : "FAIL") << ": |coefficient| " << (report.matches ? "==" : "!=") << ' '
      << kClaimedLeadingCoefficient << '\n';
  return report.matches ? kOk : kVerificationFailed;
}

Domain domain_arg(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("--domain must be x0,x1,y0,y1");
  double v[4];
  for (int i = 0; i < 4; ++i) {
    try {
      std::size_t used = 0;
      v[i] = std::stod(parts[static_cast<std::size_t>(i)], &used);
      if (used != parts[static_cast<std::size_t>(i)].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("--domain: bad number '" + parts[static_cast<std::size_t>(i)] + "'");
    }
  }
  Domain d{v[0], v[1], v[2], v[3]};
  if (!(d.x0 < d.x1) || !(d.y0 < d.y1)) throw UsageError("--domain is empty");
  return d;
}

int trace_cmd(const std::filesystem::path& cache, int grid, const std::string& domain_text, const std::string& out_path,
              const std::string& svg_path, unsigned workers, std::ostream& out, std::ostream& err) {
  if (grid < 2) throw UsageError("--grid must be >= 2");
  const Domain domain = domain_arg(domain_text);
  const MultiPoly curve = final_resultant(cache);
  const auto points = trace_curve(curve, grid, domain, workers);
  emit(format_csv(points), out_path, out);
  if (!svg_path.empty()) atomic_write(svg_path, format_svg(points, domain));
  err << points.size() << " curve points\n";
  return kOk;
}

int solve_cmd(const std::string& xs, const std::string& ys, double tol, std::ostream& out) {
  const Rational x = rational_arg(xs, "--x");
  const Rational y = rational_arg(ys, "--y");
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  const auto result = back_solve(x.get_d(), y.get_d(), tol);
  out << "point: x = " << format_rational(x) << ", y = " << format_rational(y) << '\n';
  out << "tuples: " << result.tuples.size() << '\n';
  const char* side_names[] = {"1-v", "1-v", "1-v-y-z", "1-y-z", "1-u", "1-w-u", "1-u", "1-x-u", "u+w"};
  for (std::size_t k = 0; k < result.tuples.size(); ++k) {
    const auto& [t, report] = result.tuples[k];
    out << "tuple " << k + 1 << ":";
    for (Var v : kAllVars) out << ' ' << var_symbol(v) << '=' << fmt(t[v], "%.12g");
    out << '\n';
    out << "  residuals:";
    for (std::size_t i = 0; i < report.residuals.size(); ++i) out << " P" << i + 1 << '=' << fmt(report.residuals[i]);
    out << "\n  side margins:";
    for (std::size_t i = 0; i < report.side_margins.size(); ++i)
      out << ' ' << side_names[i] << '=' << fmt(report.side_margins[i]);
    out << "\n  out of (0,1):";
    bool any = false;
    for (Var v : kAllVars)
      if (!report.in_range[index_of(v)]) {
        out << ' ' << var_symbol(v);
        any = true;
      }
    out << (any ? "" : " none") << '\n';
    out << "  max scaled residual " << fmt(report.max_scaled_residual()) << " -> "
        << (report.max_scaled_residual() <= tol ? "valid" : "not a solution") << '\n';
  }
  for (const auto& note : result.notes) out << "note: " << note << '\n';
  return kOk;
}

int symmetral_cmd(const std::string& polygon_path, const std::string& dir, const std::string& out_path,
                  std::ostream& out) {
  const ConvexPolygon p = polygon_file(polygon_path);
  const Direction d = direction_arg(dir);
  emit(format_polygon(steiner_symmetral(p, d)), out_path, out);
  return kOk;
}

int compare_cmd(const std::string& a_path, const std::string& b_path, const std::string& dirs_text, std::ostream& out) {
  const ConvexPolygon a = polygon_file(a_path);
  const ConvexPolygon b = polygon_file(b_path);
  std::vector<Direction> dirs;
  for (const auto& part : split(dirs_text, ';'))
    if (!trim(part).empty()) dirs.push_back(direction_arg(part));
  if (dirs.empty()) throw UsageError("--dirs needs at least one direction");
  bool all = true;
  for (const auto& d : dirs) {
    const bool eq = chord_functions_equal(chord_function(a, d), chord_function(b, d));
    all = all && eq;
    out << direction_text(d) << ": " << (eq ? "equal" : "different") << '\n';
  }
  out << "x-ray equivalent: " << (all ? "yes" : "no") << '\n';
  return kOk;
}

int triangle_demo_cmd(std::uint64_t seed, std::ostream& out) {
  AmbiguousTriangles pair = [&] {
    try {
      return find_ambiguous_triangles(seed);
    } catch (const SearchFailure& e) {
      throw VerificationFailure(e.what());
    }
  }();
  out << "first triangle:\n" << format_polygon(pair.first);
  out << "second triangle:\n" << format_polygon(pair.second);
  bool ok = true;
  for (const auto& d : {pair.first_direction, pair.second_direction}) {
    const auto f1 = chord_function(pair.first, d);
    const auto f2 = chord_function(pair.second, d);
    const bool eq = chord_functions_equal(f1, f2);
    ok = ok && eq;
    out << "direction " << direction_text(d) << ": " << (eq ? "equal" : "different") << " chord functions "
        << chord_text(f1) << '\n';
  }
  const bool congruent = triangles_congruent(pair.first, pair.second);
  ok = ok && !congruent;
  out << "congruent: " << (congruent ? "yes" : "no") << '\n';
  out << "found after " << pair.attempts << " attempts\n";
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equal-chord ambiguity of convex pentagons: elimination, curve tracing and X-ray tools", "xraypent"};
  app.require_subcommand(1, 1);
  std::string cache_flag;
  app.add_option("--cache", cache_flag, "Cache directory (default: $XRAYPENT_CACHE or the user cache dir)");

  int samples = 100;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify-system", "Re-derive both elimination stages and compare with Q1-Q3, R1-R2");
  verify->add_option("--samples", samples, "Sampled solutions per comparison")->capture_default_str();
  verify->add_option("--seed", seed, "Sampling seed")->capture_default_str();

  std::string stage, out_path;
  auto* elim = app.add_subcommand("eliminate", "Print computed eliminants, one polynomial per line");
  elim->add_option("--stage", stage, "zw (images of P1, P3, P4, P5) or v (images of Q2, Q3)")->required();
  elim->add_option("--out", out_path, "Output file");

  bool check_leading = false;
  std::string backend = "auto";
  unsigned workers = 0;
  auto* res = app.add_subcommand("resultant", "Res_u(R1, R2), cached");
  res->add_option("--out", out_path, "Write the polynomial to this file");
  res->add_flag("--check-leading", check_leading, "Check the x^42*y^34 coefficient against 16^7");
  res->add_option("--backend", backend, "auto, bareiss or evalinterp")->capture_default_str();
  res->add_option("--workers", workers, "Worker threads (0 = all cores)");

  int grid = 512;
  std::string domain = "0,1,0,1", svg_path;
  auto* trace = app.add_subcommand("trace", "Trace the zero set of the cached resultant");
  trace->add_option("--grid", grid, "Lattice cells per side")->capture_default_str();
  trace->add_option("--domain", domain, "x0,x1,y0,y1")->capture_default_str();
  trace->add_option("--out", out_path, "CSV output file (default: stdout)");
  trace->add_option("--svg", svg_path, "SVG plot file");
  trace->add_option("--workers", workers, "Worker threads (0 = all cores)");

  std::string sx, sy;
  double tol = 1e-8;
  auto* solve = app.add_subcommand("solve", "Back-solve parameter tuples at a curve point");
  solve->add_option("--x", sx, "x as P/Q or integer")->required();
  solve->add_option("--y", sy, "y as P/Q or integer")->required();
  solve->add_option("--tol", tol, "R2 residual tolerance")->capture_default_str();

  std::string polygon, dir;
  auto* sym = app.add_subcommand("symmetral", "Steiner symmetral of a polygon");
  sym->add_option("--polygon", polygon, "Polygon file")->required();
  sym->add_option("--dir", dir, "Direction DX,DY")->required();
  sym->add_option("--out", out_path, "Output file");

  std::string a_path, b_path, dirs;
  auto* cmp = app.add_subcommand("compare", "Compare X-rays of two polygons");
  cmp->add_option("--a", a_path, "First polygon file")->required();
  cmp->add_option("--b", b_path, "Second polygon file")->required();
  cmp->add_option("--dirs", dirs, "Directions DX1,DY1;DX2,DY2;...")->required();

  std::uint64_t demo_seed = 1;
  auto* demo = app.add_subcommand("triangle-demo", "Find two non-congruent triangles with equal X-rays");
  demo->add_option("--seed", demo_seed, "Search seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto cache = resolve_cache_dir(cache_flag.empty() ? std::nullopt : std::optional<std::string>(cache_flag));
    if (verify->parsed()) return verify_system_cmd(samples, seed, out);
    if (elim->parsed()) return eliminate_cmd(stage, out_path, out);
    if (res->parsed()) return resultant_cmd(cache, out_path, check_leading, backend, workers, out);
    if (trace->parsed()) return trace_cmd(cache, grid, domain, out_path, svg_path, workers, out, err);
    if (solve->parsed()) return solve_cmd(sx, sy, tol, out);
    if (sym->parsed()) return symmetral_cmd(polygon, dir, out_path, out);
    if (cmp->parsed()) return compare_cmd(a_path, b_path, dirs, out);
    if (demo->parsed()) return triangle_demo_cmd(demo_seed, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace xraypent::cli
