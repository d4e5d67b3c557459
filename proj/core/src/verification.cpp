#include <algorithm>
#include <memory>

#include "xraypent/cache.hpp"
#include "xraypent/paper_system.hpp"

namespace xraypent {

namespace fs = std::filesystem;

std::string_view relation_name(Relation r) noexcept {
  switch (r) {
    case Relation::exact: return "EXACT";
    case Relation::constant_multiple: return "CONSTANT_MULTIPLE";
    case Relation::divides_computed: return "DIVIDES_COMPUTED";
    case Relation::sample_consistent: return "SAMPLE_CONSISTENT";
    case Relation::inconsistent: return "INCONSISTENT";
  }
  return "?";
}

namespace {

Integer leading_coefficient(const MultiPoly& p) { return p.terms().front().coefficient; }

std::optional<RelationReport> exact_relation(const MultiPoly& computed, const MultiPoly& claimed) {
  const MultiPoly pc = computed.primitive_part();
  const MultiPoly pq = claimed.primitive_part();
  if (pc == pq || pc == -pq) {
    Rational c(leading_coefficient(computed), leading_coefficient(claimed));
    c.canonicalize();
    const bool unit = c == 1 || c == -1;
    return RelationReport{unit ? Relation::exact : Relation::constant_multiple, format_rational(c), 0, 0.0};
  }
  if (auto q = pc.try_exact_div(pq))
    return RelationReport{Relation::divides_computed, "computed = (" + format_poly(*q) + ") * claimed", 0, 0.0};
  if (auto q = pq.try_exact_div(pc))
    return RelationReport{Relation::divides_computed, "claimed = (" + format_poly(*q) + ") * computed", 0, 0.0};
  return std::nullopt;
}

// Runs the sampler once and hands out the same tuples to every caller.
Sampler memoized(std::function<SampleResult(int)> f) {
  auto cache = std::make_shared<std::optional<std::pair<int, SampleResult>>>();
  return [f = std::move(f), cache](int n) {
    if (!*cache || (*cache)->first < n) *cache = std::make_pair(n, f(n));
    SampleResult r = (*cache)->second;
    if (static_cast<int>(r.tuples.size()) > n) r.tuples.resize(static_cast<std::size_t>(n));
    return r;
  };
}

StageComparison run_comparison(std::string claimed_name, std::string computed_name, const MultiPoly& computed,
                               const MultiPoly& claimed, int samples, const Sampler& sampler) {
  StageComparison c{std::move(claimed_name), std::move(computed_name), std::nullopt, std::nullopt};
  try {
    c.report = compare_with_paper(computed, claimed, samples, sampler);
  } catch (const SamplingFailure& e) {
    c.failure = e.what();
  }
  return c;
}

}  // namespace

RelationReport compare_with_paper(const MultiPoly& computed, const MultiPoly& claimed, int samples,
                                  const Sampler& sampler) {
  if (computed.is_zero() || claimed.is_zero()) throw std::invalid_argument("compare_with_paper: zero polynomial");
  if (samples < 1) throw std::invalid_argument("compare_with_paper: samples must be >= 1");
  if (auto exact = exact_relation(computed, claimed)) return *exact;

  SampleResult found = sampler(samples);
  if (found.tuples.empty())
    throw SamplingFailure("no admissible solutions of the ambient system were found (" +
                              std::to_string(found.slices_tried) + " slices, " + std::to_string(found.candidates) +
                              " candidates rejected)",
                          found);
  RelationReport r;
  for (const auto& t : found.tuples) {
    const auto at = t.assignment();
    r.max_residual = std::max({r.max_residual, scaled_residual(computed, at), scaled_residual(claimed, at)});
    ++r.samples_used;
  }
  r.relation = r.max_residual <= kSampleTolerance ? Relation::sample_consistent : Relation::inconsistent;
  return r;
}

bool StageComparison::passed() const { return report && report->relation != Relation::inconsistent; }

bool VerificationSummary::passed() const {
  auto ok = [](const StageComparison& c) { return c.passed(); };
  return std::all_of(stage1.begin(), stage1.end(), ok) && std::all_of(stage2.begin(), stage2.end(), ok);
}

VerificationSummary verify_system(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("verify_system: samples must be >= 1");
  VerificationSummary summary;

  const auto images = eliminate_zw();
  const char* image_names[] = {"zw(B1B5)", "zw(D1D5)", "zw(E2A2)", "zw(E3A3)"};
  const Sampler p_sampler = memoized([seed](int n) { return sample_chain(pentagon_chain(), n, seed); });

  const auto& qs = derived_stage1();
  for (const auto& q : qs) {
    // Pair with an image that relates exactly if there is one; otherwise the
    // image closest in shape (same v-degree, nearest term count).
    std::size_t best = 0;
    bool found_exact = false;
    for (std::size_t i = 0; i < images.size() && !found_exact; ++i)
      if (exact_relation(images[i], q.poly)) {
        best = i;
        found_exact = true;
      }
    if (!found_exact) {
      auto score = [&](const MultiPoly& e) {
        const bool same_v = e.degree_in(Var::v) == q.poly.degree_in(Var::v);
        const auto diff = static_cast<long>(e.term_count()) - static_cast<long>(q.poly.term_count());
        return std::make_pair(same_v ? 0 : 1, std::labs(diff));
      };
      for (std::size_t i = 1; i < images.size(); ++i)
        if (score(images[i]) < score(images[best])) best = i;
    }
    summary.stage1.push_back(
        run_comparison(std::string(tag_name(q.label)), image_names[best], images[best], q.poly, samples, p_sampler));
  }

  summary.stage1_sampling = p_sampler(samples);
  summary.stage1_samples = static_cast<int>(summary.stage1_sampling.tuples.size());
  for (const auto& t : summary.stage1_sampling.tuples)
    for (const auto& e : images)
      summary.eliminant_max_residual = std::max(summary.eliminant_max_residual, scaled_residual(e, t.assignment()));

  const auto reduced = eliminate_v();
  const Sampler q_sampler = memoized([seed](int n) { return sample_chain(stage1_chain(), n, seed); });
  summary.stage2.push_back(
      run_comparison("R1", "v(Q2)", reduced[0], equation(EquationTag::R1), samples, q_sampler));
  summary.stage2.push_back(
      run_comparison("R2", "v(Q3)", reduced[1], equation(EquationTag::R2), samples, q_sampler));
  return summary;
}

MultiPoly compute_final_resultant(DetOptions options) {
  const MultiPoly r = resultant(equation(EquationTag::R1), equation(EquationTag::R2), Var::u, options);
  if (r.is_zero()) throw VerificationFailure("Res_u(R1, R2) vanishes identically");
  return r.primitive_part();
}

MultiPoly final_resultant(const fs::path& cache_dir, DetOptions options) {
  const auto& r1 = equation(EquationTag::R1);
  const auto& r2 = equation(EquationTag::R2);
  const DetBackend backend = resolve_backend(sylvester(r1, r2, Var::u), options.backend);
  const std::string key =
      hex64(fnv1a64(format_poly(r1) + "\n" + format_poly(r2) + "\n" + std::string(backend_name(backend)))) + "\n";

  const fs::path poly_path = cache_dir / "final_resultant.poly";
  const fs::path key_path = cache_dir / "final_resultant.key";
  if (auto stored_key = read_file(key_path); stored_key && *stored_key == key) {
    if (auto text = read_file(poly_path)) {
      try {
        MultiPoly cached = parse_poly(*text);
        if (!cached.is_zero()) return cached;
      } catch (const ParseError&) {
        // fall through and recompute
      }
    }
  }

  options.backend = backend;
  MultiPoly result = compute_final_resultant(options);
  atomic_write(poly_path, format_poly(result) + "\n");
  atomic_write(key_path, key);
  return result;
}

FirstTermReport check_first_term(const MultiPoly& curve) {
  if (curve.is_zero()) throw std::invalid_argument("check_first_term: zero polynomial");
  Monomial target = Monomial::of(Var::x, 42) * Monomial::of(Var::y, 34);
  FirstTermReport report;
  report.coefficient = curve.coefficient_of(target);
  if (report.coefficient == 0) throw VerificationFailure("the curve polynomial has no x^42*y^34 term");
  report.matches = abs(report.coefficient) == Integer(kClaimedLeadingCoefficient);

  const std::pair<const char*, MonomialOrder> orders[] = {
      {"lex(x>y)", MonomialOrder::lex({Var::x, Var::y})},
      {"lex(y>x)", MonomialOrder::lex({Var::y, Var::x})},
      {"grlex(x>y)", MonomialOrder::grlex({Var::x, Var::y})},
  };
  for (const auto& [name, order] : orders) report.leading_terms.emplace_back(name, curve.leading_term(order));

  const auto& r1 = equation(EquationTag::R1);
  const auto& r2 = equation(EquationTag::R2);
  const auto lex = MonomialOrder::lex({Var::x, Var::y});
  report.diagonal_terms.emplace_back("R1 rows first, lex(x>y)", sylvester_diagonal_term(r1, r2, Var::u, lex));
  report.diagonal_terms.emplace_back("R2 rows first, lex(x>y)", sylvester_diagonal_term(r2, r1, Var::u, lex));
  return report;
}

}  // namespace xraypent
