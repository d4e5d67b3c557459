#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "xraypent/cache.hpp"
#include "xraypent/paper_system.hpp"

using namespace xraypent;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

const EquationTag kAll[] = {EquationTag::B1B5, EquationTag::C1C5, EquationTag::D1D5, EquationTag::E2A2,
                            EquationTag::E3A3, EquationTag::E4A4, EquationTag::Q1,   EquationTag::Q2,
                            EquationTag::Q3,   EquationTag::R1,   EquationTag::R2};

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Sampler fixed(std::vector<ParameterTuple> tuples) {
  return [tuples](int) {
    SampleResult r;
    r.tuples = tuples;
    return r;
  };
}

ParameterTuple tuple(double u, double v) {
  ParameterTuple t;
  t.u = u;
  t.v = v;
  t.w = t.x = t.y = t.z = 0.5;
  return t;
}

}  // namespace

TEST_CASE("transcriptions match the independently expanded text") {
  const auto golden = lines(oracle::read_data("transcriptions.txt"));
  REQUIRE(golden.size() == 11);
  const char* labels[] = {"P1", "P2", "P3", "P4", "P5", "P6", "Q1", "Q2", "Q3", "R1", "R2"};
  for (std::size_t i = 0; i < 11; ++i) {
    CAPTURE(labels[i]);
    CHECK(golden[i] == std::string(labels[i]) + " " + format_poly(equation(kAll[i])));
    CHECK(parse_poly(transcription(kAll[i])) == equation(kAll[i]));
  }
}

TEST_CASE("stored equations") {
  const auto& ps = pentagon_system();
  REQUIRE(ps.size() == 6);
  CHECK(ps[1].poly == P("u + w - x"));
  for (Var v : {Var::u, Var::w, Var::x}) CHECK(ps[1].poly.degree_in(v) == Degree(1));
  CHECK(ps[5].poly == P("z*w - y*u - v*w"));
  CHECK(tag_name(ps[0].label) == "B1B5");
  CHECK(tag_name(ps[5].label) == "E4A4");

  RationalAssignment at{};
  at[index_of(Var::u)] = q(1, 4);
  at[index_of(Var::v)] = 0;
  at[index_of(Var::w)] = q(1, 4);
  at[index_of(Var::x)] = q(1, 2);
  at[index_of(Var::y)] = q(1, 4);
  at[index_of(Var::z)] = 0;
  CHECK(eval_exact(ps[0].poly, at) == 0);

  const std::vector<std::vector<MultiPoly>> sides{
      {P("1 - v")},           {P("1 - v"), P("1 - v - y - z")}, {P("1 - y - z")},
      {P("1 - u"), P("1 - w - u")}, {P("1 - u"), P("1 - x - u")},     {P("u + w")}};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(ps[i].nonvanishing == sides[i]);
    CHECK_FALSE(ps[i].poly.is_zero());
  }
}

TEST_CASE("degree facts") {
  const auto& s1 = derived_stage1();
  const auto& s2 = derived_stage2();
  REQUIRE(s1.size() == 3);
  REQUIRE(s2.size() == 2);
  CHECK(s1[0].poly.degree_in(Var::v) == Degree(1));
  CHECK(s1[1].poly.degree_in(Var::v) == Degree(2));
  CHECK(s1[2].poly.degree_in(Var::v) == Degree(2));
  CHECK(s2[0].poly.degree_in(Var::u) == Degree(6));
  CHECK(s2[1].poly.degree_in(Var::u) == Degree(7));
  for (const auto& e : s1) {
    CHECK_FALSE(e.poly.contains(Var::w));
    CHECK_FALSE(e.poly.contains(Var::z));
  }
  for (const auto& e : s2) CHECK_FALSE(e.poly.contains(Var::v));

  CHECK(q1_v_solution().a_coef() == P("y - 3*y*u + y*u^2 - 3*x*y + 3*x*y*u + u"));
  const auto r1_const = equation(EquationTag::R1).coefficients_in(Var::u).front();
  CHECK(r1_const.coefficient_of(Monomial::of(Var::x, 6) * Monomial::of(Var::y, 4)) == 16);
  CHECK(equation(EquationTag::R2).coefficients_in(Var::u).back() == P("-y"));
}

TEST_CASE("eliminants match the independent expansion") {
  const auto zw = eliminate_zw();
  const auto golden_zw = lines(oracle::read_data("eliminants_zw.txt"));
  REQUIRE(zw.size() == 4);
  REQUIRE(golden_zw.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(format_poly(zw[i]) == golden_zw[i]);
    CHECK_FALSE(zw[i].contains(Var::w));
    CHECK_FALSE(zw[i].contains(Var::z));
    CHECK(zw[i].content() == 1);
  }
  CHECK(zw[0] == P("x - u") - P("x - u") * P("v") - P("2*x*y"));

  const auto vs = eliminate_v();
  const auto golden_v = lines(oracle::read_data("eliminants_v.txt"));
  REQUIRE(vs.size() == 2);
  REQUIRE(golden_v.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(format_poly(vs[i]) == golden_v[i]);
    CHECK_FALSE(vs[i].contains(Var::v));
  }
}

TEST_CASE("compare_with_paper exact branches") {
  const MultiPoly p = P("x^2*y - 3*u + 2");
  const Sampler unused = [](int) -> SampleResult { throw std::logic_error("sampler should not run"); };

  auto r = compare_with_paper(p, p, 5, unused);
  CHECK(r.relation == Relation::exact);
  CHECK(r.detail == "1");
  CHECK(compare_with_paper(-p, p, 5, unused).relation == Relation::exact);

  r = compare_with_paper(p * Integer(3), p, 5, unused);
  CHECK(r.relation == Relation::constant_multiple);
  CHECK(r.detail == "3");
  r = compare_with_paper(p, p * Integer(3), 5, unused);
  CHECK(r.relation == Relation::constant_multiple);
  CHECK(r.detail == "1/3");

  r = compare_with_paper(p * P("y"), p, 5, unused);
  CHECK(r.relation == Relation::divides_computed);
  CHECK(r.detail == "computed = (y) * claimed");
  r = compare_with_paper(p, p * P("u - x"), 5, unused);
  CHECK(r.relation == Relation::divides_computed);
  CHECK(r.detail == "claimed = (u - x) * computed");

  CHECK_THROWS_AS(compare_with_paper(MultiPoly(), p, 5, unused), std::invalid_argument);
  CHECK_THROWS_AS(compare_with_paper(p, p, 0, unused), std::invalid_argument);
}

TEST_CASE("compare_with_paper sampling branches") {
  const MultiPoly a = P("u + v - 1");
  const MultiPoly b = P("u*v");
  auto r = compare_with_paper(a, b, 2, fixed({tuple(1, 0), tuple(0, 1)}));
  CHECK(r.relation == Relation::sample_consistent);
  CHECK(r.samples_used == 2);
  CHECK(r.max_residual == 0.0);

  r = compare_with_paper(a, b, 2, fixed({tuple(1, 0), tuple(0.5, 0.5)}));
  CHECK(r.relation == Relation::inconsistent);
  CHECK(r.max_residual > kSampleTolerance);

  try {
    compare_with_paper(a, b, 2, fixed({}));
    FAIL("expected SamplingFailure");
  } catch (const SamplingFailure& e) {
    CHECK(e.diagnostics().tuples.empty());
  }
  CHECK(relation_name(Relation::divides_computed) == "DIVIDES_COMPUTED");
  CHECK(relation_name(Relation::sample_consistent) == "SAMPLE_CONSISTENT");
}

TEST_CASE("stage two relations agree with the golden") {
  const auto golden = lines(oracle::read_data("stage_relations.txt"));
  REQUIRE(golden.size() == 5);
  const auto vs = eliminate_v();
  const Sampler sampler = [](int n) { return sample_chain(stage1_chain(), n, 5); };
  for (int i = 0; i < 2; ++i) {
    const auto& line = golden[3 + i];
    const auto claimed = equation(i == 0 ? EquationTag::R1 : EquationTag::R2);
    CAPTURE(line);
    const auto r = compare_with_paper(vs[i], claimed, 20, sampler);
    const std::string rel = line.substr(3);
    if (rel == "none") {
      CHECK((r.relation == Relation::sample_consistent || r.relation == Relation::inconsistent));
      CHECK(r.samples_used == 20);
    } else {
      REQUIRE(rel.rfind("computed=(", 0) == 0);
      const auto close = rel.find(")*claimed");
      const std::string quotient = rel.substr(10, close - 10);
      CHECK(r.relation == Relation::divides_computed);
      CHECK(r.detail == "computed = (" + format_poly(parse_poly(quotient)) + ") * claimed");
    }
  }
  // No zw image relates exactly to any Q.
  for (int i = 0; i < 3; ++i) CHECK(golden[i].substr(3) == "none");
}

TEST_CASE("stage one sampling finds no admissible pentagon solutions") {
  const auto s = sample_chain(pentagon_chain(), 3, 1, 20);
  CHECK(s.tuples.empty());
  CHECK(s.exhausted);
  CHECK(s.slices_tried == 20);
  const Sampler sampler = [](int n) { return sample_chain(pentagon_chain(), n, 1, 20); };
  CHECK_THROWS_AS(compare_with_paper(eliminate_zw()[0], equation(EquationTag::Q1), 3, sampler), SamplingFailure);
}

TEST_CASE("final resultant is cached and matches the golden") {
  const auto dir = oracle::temp_dir("paper_system_cache");
  const auto golden = lines(oracle::read_data("final_resultant.poly"));
  REQUIRE(golden.size() == 1);

  const MultiPoly r = final_resultant(dir);
  CHECK(format_poly(r) == golden[0]);
  CHECK(read_file(dir / "final_resultant.poly").value() == golden[0] + "\n");
  CHECK(read_file(dir / "final_resultant.key").has_value());

  // A second call reads the cache: tamper with the stored polynomial.
  atomic_write(dir / "final_resultant.poly", "x + y\n");
  CHECK(final_resultant(dir) == P("x + y"));
  // A stale key forces recomputation.
  atomic_write(dir / "final_resultant.key", "stale\n");
  CHECK(final_resultant(dir) == r);
  // Unparseable cache content is recomputed, not trusted.
  atomic_write(dir / "final_resultant.poly", "x +* y\n");
  CHECK(final_resultant(dir) == r);

  CHECK(compute_final_resultant(DetOptions{DetBackend::bareiss, 1}) == r);
  CHECK(r.degree_in(Var::x) == Degree(42));
  CHECK(r.degree_in(Var::y) == Degree(41));
  CHECK_FALSE(r.contains(Var::u));
  std::filesystem::remove_all(dir);
}

TEST_CASE("first term report") {
  const MultiPoly r = parse_poly(lines(oracle::read_data("final_resultant.poly"))[0]);
  const auto report = check_first_term(r);
  const Monomial target = Monomial::of(Var::x, 42) * Monomial::of(Var::y, 34);
  CHECK(report.coefficient == r.coefficient_of(target));
  CHECK(report.matches == (abs(report.coefficient) == Integer(268435456)));
  CHECK(kClaimedLeadingCoefficient == 16L * 16 * 16 * 16 * 16 * 16 * 16);
  REQUIRE(report.leading_terms.size() == 3);
  CHECK(report.leading_terms[0].first == "lex(x>y)");
  for (const auto& [name, term] : report.leading_terms) CHECK(r.coefficient_of(term.monomial) == term.coefficient);
  REQUIRE(report.diagonal_terms.size() == 2);

  CHECK(check_first_term(P("-268435456*x^42*y^34 + x")).matches);
  CHECK_FALSE(check_first_term(P("3*x^42*y^34")).matches);
  CHECK_THROWS_AS(check_first_term(P("x + y")), VerificationFailure);
}
