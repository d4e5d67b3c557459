#pragma once

// Exact sparse multivariate polynomials over Z in the fixed variable set
// {u, v, w, x, y, z}.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xraypent {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Var : std::uint8_t { u = 0, v, w, x, y, z };

inline constexpr std::size_t kVarCount = 6;
inline constexpr std::array<Var, kVarCount> kAllVars{Var::u, Var::v, Var::w,
                                                     Var::x, Var::y, Var::z};

constexpr std::size_t index_of(Var v) noexcept { return static_cast<std::size_t>(v); }
char var_symbol(Var v) noexcept;
std::optional<Var> var_from_symbol(char c) noexcept;

/// Degree of a polynomial in one variable (or in total). The zero polynomial
/// has degree minus infinity, which compares below every finite degree.
class Degree {
 public:
  /// Minus infinity.
  constexpr Degree() noexcept : raw_(kMinusInf) {}
  constexpr explicit Degree(std::uint32_t d) noexcept : raw_(d) {}
  static constexpr Degree minus_infinity() noexcept { return Degree(); }

  constexpr bool is_minus_infinity() const noexcept { return raw_ == kMinusInf; }
  std::uint32_t value() const;

  constexpr auto operator<=>(const Degree&) const noexcept = default;

 private:
  static constexpr std::int64_t kMinusInf = INT64_MIN;
  std::int64_t raw_;
};

class Monomial {
 public:
  using Exponent = std::uint32_t;
  using Exponents = std::array<Exponent, kVarCount>;

  Monomial() = default;
  explicit Monomial(const Exponents& e) noexcept : exps_(e) {}
  static Monomial of(Var v, Exponent e = 1) noexcept;

  Exponent operator[](Var v) const noexcept { return exps_[index_of(v)]; }
  const Exponents& exponents() const noexcept { return exps_; }
  std::uint64_t total_degree() const noexcept;
  bool is_unit() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  /// Throws std::overflow_error when an exponent leaves the 32-bit range.
  Monomial operator*(const Monomial& other) const;
  /// Precondition: other.divides(*this).
  Monomial operator/(const Monomial& other) const noexcept;
  Monomial with(Var v, Exponent e) const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Exponents exps_{};
};

/// grlex with u > v > w > x > y > z: the canonical storage and emission order.
bool canonical_greater(const Monomial& a, const Monomial& b) noexcept;

struct CanonicalGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return canonical_greater(a, b);
  }
};

class MonomialOrder {
 public:
  enum class Kind { lex, grlex };
  using Precedence = std::array<Var, kVarCount>;

  /// Throws std::invalid_argument unless precedence is a permutation of the
  /// variable set.
  MonomialOrder(Kind kind, const Precedence& precedence);

  /// Variables listed first take precedence; the rest follow in u..z order.
  static MonomialOrder lex(std::initializer_list<Var> leading);
  static MonomialOrder grlex(std::initializer_list<Var> leading);
  static MonomialOrder canonical();

  Kind kind() const noexcept { return kind_; }
  const Precedence& precedence() const noexcept { return precedence_; }
  bool greater(const Monomial& a, const Monomial& b) const noexcept;
  std::string describe() const;

 private:
  Kind kind_;
  Precedence precedence_;
};

struct Term {
  Monomial monomial;
  Integer coefficient;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coefficient == b.coefficient;
  }
};

using RationalAssignment = std::array<std::optional<Rational>, kVarCount>;
using FloatAssignment = std::array<std::optional<double>, kVarCount>;

class MissingVariable : public std::invalid_argument {
 public:
  explicit MissingVariable(Var v);
  Var variable() const noexcept { return var_; }

 private:
  Var var_;
};

/// Immutable-by-convention sparse polynomial. Terms are kept sorted by
/// canonical_greater with no zero coefficients, so structural equality is
/// polynomial equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Monomial& m, const Integer& c);
  /// Collects like terms and drops zeros; input order is irrelevant.
  static MultiPoly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool contains(Var v) const noexcept;
  std::vector<Var> variables() const;

  Degree degree_in(Var v) const noexcept;
  Degree total_degree() const noexcept;
  /// Index k holds the coefficient of v^k; empty for the zero polynomial.
  std::vector<MultiPoly> coefficients_in(Var v) const;
  Integer coefficient_of(const Monomial& m) const;

  /// Throws std::domain_error for the zero polynomial.
  Term leading_term(const MonomialOrder& order) const;

  /// gcd of the coefficients, signed so that primitive_part() has a positive
  /// canonical leading coefficient. Zero for the zero polynomial.
  Integer content() const;
  MultiPoly primitive_part() const;

  /// Quotient q with q * d == *this, or nullopt if no polynomial quotient
  /// exists. Throws std::domain_error when d is zero.
  std::optional<MultiPoly> try_exact_div(const MultiPoly& d) const;
  /// Division by a nonzero integer that must be exact.
  MultiPoly divided_exactly(const Integer& c) const;

  MultiPoly substitute(Var v, const Integer& value) const;
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  /// den^deg_v * p(v = num/den): stays in Z[vars] for rational points.
  MultiPoly substitute_cleared(Var v, const Rational& value) const;
  MultiPoly derivative(Var v) const;
  MultiPoly pow(unsigned e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const Integer& c);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  explicit MultiPoly(std::vector<Term> sorted_terms) noexcept : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly neg(const MultiPoly& a);

Rational eval_exact(const MultiPoly& p, const RationalAssignment& at);
/// Term-wise evaluation in extended precision with compensated summation;
/// not exact.
double eval_float(const MultiPoly& p, const FloatAssignment& at);

// ---- text form ------------------------------------------------------------

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// poly := term (('+'|'-') term)*, explicit '*', variables u..z, '^' powers.
MultiPoly parse_poly(std::string_view text);
/// Canonical emission: terms in grlex(u>v>w>x>y>z) descending order.
std::string format_poly(const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// "P/Q" or an integer, optionally signed.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

}  // namespace xraypent
