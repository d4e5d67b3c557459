#pragma once

// Variable elimination: Sylvester resultants over exact determinant kernels,
// and substitution of a variable that appears linearly.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "xraypent/poly.hpp"

namespace xraypent {

class PolyMatrix {
 public:
  /// Zero-filled; throws std::invalid_argument for an empty shape.
  PolyMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  MultiPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const MultiPoly> entries() const noexcept { return entries_; }

  PolyMatrix substitute(Var v, const Integer& value) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> entries_;
};

/// Solved form of a_coef * var + b_coef = 0.
class LinearSolution {
 public:
  /// Throws std::invalid_argument if a_coef is zero or either part mentions var.
  LinearSolution(Var var, MultiPoly a_coef, MultiPoly b_coef);
  /// Reads off A and B from a polynomial of degree exactly one in var.
  static LinearSolution solve_for(const MultiPoly& p, Var var);

  Var var() const noexcept { return var_; }
  const MultiPoly& a_coef() const noexcept { return a_; }
  const MultiPoly& b_coef() const noexcept { return b_; }

 private:
  Var var_;
  MultiPoly a_;
  MultiPoly b_;
};

enum class DetBackend { automatic, bareiss, eval_interp };

std::string_view backend_name(DetBackend b) noexcept;
std::optional<DetBackend> backend_from_name(std::string_view name) noexcept;

struct DetOptions {
  DetBackend backend = DetBackend::automatic;
  /// Worker threads for evaluation-interpolation; 0 picks the hardware count.
  unsigned workers = 0;
};

/// f-rows-first Sylvester matrix in var, coefficients by descending power.
/// Throws std::invalid_argument for zero inputs or when both degrees are 0.
PolyMatrix sylvester(const MultiPoly& f, const MultiPoly& g, Var var);

/// Exact determinant. Every backend returns the identical polynomial.
/// Throws std::invalid_argument for a non-square matrix.
MultiPoly det_fraction_free(const PolyMatrix& m, DetOptions options = {});

/// Fraction-free Gaussian elimination on a dense row-major integer matrix.
Integer det_bareiss(std::vector<Integer> entries, std::size_t n);

/// Per-variable degree bounds of det(m): min of row-sum and column-sum bounds.
std::array<Degree, kVarCount> det_degree_bounds(const PolyMatrix& m);

/// The backend `automatic` would use for m.
DetBackend resolve_backend(const PolyMatrix& m, DetBackend requested);

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var var, DetOptions options = {});

struct ResultantReport {
  MultiPoly value;
  bool common_factor_suspected = false;
  /// Common divisor removed before the retry, when one was found.
  std::optional<MultiPoly> removed_factor;
  std::optional<MultiPoly> retried_value;
};

/// resultant() plus a diagnostic retry when the result vanishes identically.
ResultantReport resultant_report(const MultiPoly& f, const MultiPoly& g, Var var, DetOptions options = {});

/// Leading term, under `order`, of the product of the Sylvester main diagonal
/// lc(f)^deg g * tc(g)^deg f.
Term sylvester_diagonal_term(const MultiPoly& f, const MultiPoly& g, Var var, const MonomialOrder& order);

/// A^d * target(var = -B/A) with d = deg_var(target); free of var.
MultiPoly substitute_linear(const MultiPoly& target, const LinearSolution& sol);

}  // namespace xraypent
