#pragma once

// The pentagon equal-chord system, its two published elimination stages and
// the checks that tie recomputed eliminants back to the published text.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xraypent/curve_solver.hpp"
#include "xraypent/eliminate.hpp"
#include "xraypent/poly.hpp"

namespace xraypent {

enum class EquationTag { B1B5, C1C5, D1D5, E2A2, E3A3, E4A4, Q1, Q2, Q3, R1, R2 };

std::string_view tag_name(EquationTag tag) noexcept;

struct SystemEquation {
  EquationTag label;
  MultiPoly poly;
  std::vector<MultiPoly> nonvanishing;
};

/// Verbatim transcription (explicit '*') of one stored equation.
std::string_view transcription(EquationTag tag);

/// P1..P6 with their side conditions, in direction order.
const std::vector<SystemEquation>& pentagon_system();
/// Q1..Q3 (after removing z and w).
const std::vector<SystemEquation>& derived_stage1();
/// R1, R2 (after removing v).
const std::vector<SystemEquation>& derived_stage2();

const MultiPoly& equation(EquationTag tag);

/// Images of P1, P3, P4, P5 under w = x - u and z = (y*u + v*w)/w (cleared),
/// content-normalized.
std::vector<MultiPoly> eliminate_zw();
/// Q1 read as A*v + B = 0.
LinearSolution q1_v_solution();
/// Q2 and Q3 pushed through Q1's v-solution, content-normalized.
std::vector<MultiPoly> eliminate_v();

// ---- comparison ----------------------------------------------------------------------

enum class Relation { exact, constant_multiple, divides_computed, sample_consistent, inconsistent };

std::string_view relation_name(Relation r) noexcept;

struct RelationReport {
  Relation relation = Relation::inconsistent;
  /// The constant (EXACT / CONSTANT_MULTIPLE) or quotient (DIVIDES_COMPUTED).
  std::string detail;
  int samples_used = 0;
  double max_residual = 0.0;
};

/// No usable sample of the ambient system was found.
class SamplingFailure : public std::runtime_error {
 public:
  SamplingFailure(const std::string& what, SampleResult diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
  const SampleResult& diagnostics() const noexcept { return diagnostics_; }

 private:
  SampleResult diagnostics_;
};

using Sampler = std::function<SampleResult(int n)>;

inline constexpr double kSampleTolerance = 1e-9;

/// Exact equality, constant multiple, exact division either way, then common
/// vanishing on sampled solutions. Throws SamplingFailure when sampling
/// yields nothing.
RelationReport compare_with_paper(const MultiPoly& computed, const MultiPoly& claimed, int samples,
                                  const Sampler& sampler);

// ---- verification pipeline -------------------------------------------------------------

struct StageComparison {
  std::string claimed;   // e.g. "Q2"
  std::string computed;  // which computed polynomial matched best
  std::optional<RelationReport> report;
  std::optional<std::string> failure;  // sampling failure text

  bool passed() const;
};

struct VerificationSummary {
  std::vector<StageComparison> stage1;
  std::vector<StageComparison> stage2;
  /// Residual of every computed zw-eliminant on the stage-1 samples.
  double eliminant_max_residual = 0.0;
  int stage1_samples = 0;
  SampleResult stage1_sampling;

  bool passed() const;
};

VerificationSummary verify_system(int samples, std::uint64_t seed);

// ---- final curve ---------------------------------------------------------------------------

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Res_u(R1, R2), content-normalized and cached as final_resultant.poly.
/// Throws VerificationFailure if the resultant vanishes identically.
MultiPoly final_resultant(const std::filesystem::path& cache_dir, DetOptions options = {});
/// Uncached computation.
MultiPoly compute_final_resultant(DetOptions options = {});

struct FirstTermReport {
  Integer coefficient;  // of x^42*y^34
  bool matches = false;  // |coefficient| == 16^7
  std::vector<std::pair<std::string, Term>> leading_terms;
  /// Leading terms of the Sylvester main-diagonal products, for reference.
  std::vector<std::pair<std::string, Term>> diagonal_terms;
};

inline constexpr long kClaimedLeadingCoefficient = 268435456;  // 16^7

/// Throws VerificationFailure when x^42*y^34 is absent.
FirstTermReport check_first_term(const MultiPoly& curve);

}  // namespace xraypent
