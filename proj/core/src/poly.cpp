#include "xraypent/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace xraypent {

char var_symbol(Var v) noexcept { return "uvwxyz"[index_of(v)]; }

std::optional<Var> var_from_symbol(char c) noexcept {
  if (c < 'u' || c > 'z') return std::nullopt;
  return static_cast<Var>(c - 'u');
}

std::uint32_t Degree::value() const {
  if (is_minus_infinity()) throw std::logic_error("degree of the zero polynomial is -infinity");
  return static_cast<std::uint32_t>(raw_);
}

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::of(Var v, Exponent e) noexcept {
  Monomial m;
  m.exps_[index_of(v)] = e;
  return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    std::uint64_t s = std::uint64_t{exps_[i]} + other.exps_[i];
    if (s > std::numeric_limits<Exponent>::max()) throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = static_cast<Exponent>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kVarCount; ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  return r;
}

Monomial Monomial::with(Var v, Exponent e) const noexcept {
  Monomial r = *this;
  r.exps_[index_of(v)] = e;
  return r;
}

bool canonical_greater(const Monomial& a, const Monomial& b) noexcept {
  auto da = a.total_degree();
  auto db = b.total_degree();
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

// ---- MonomialOrder ----------------------------------------------------------

MonomialOrder::MonomialOrder(Kind kind, const Precedence& precedence)
    : kind_(kind), precedence_(precedence) {
  std::array<bool, kVarCount> seen{};
  for (Var v : precedence_) {
    if (index_of(v) >= kVarCount || seen[index_of(v)])
      throw std::invalid_argument("monomial order precedence must be a permutation of u,v,w,x,y,z");
    seen[index_of(v)] = true;
  }
}

namespace {

MonomialOrder::Precedence complete_precedence(std::initializer_list<Var> leading) {
  MonomialOrder::Precedence p{};
  std::array<bool, kVarCount> used{};
  std::size_t k = 0;
  for (Var v : leading) {
    if (k == kVarCount || used[index_of(v)])
      throw std::invalid_argument("monomial order precedence must be a permutation of u,v,w,x,y,z");
    used[index_of(v)] = true;
    p[k++] = v;
  }
  for (Var v : kAllVars)
    if (!used[index_of(v)]) p[k++] = v;
  return p;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::initializer_list<Var> leading) {
  return {Kind::lex, complete_precedence(leading)};
}

MonomialOrder MonomialOrder::grlex(std::initializer_list<Var> leading) {
  return {Kind::grlex, complete_precedence(leading)};
}

MonomialOrder MonomialOrder::canonical() { return grlex({}); }

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const noexcept {
  if (kind_ == Kind::grlex) {
    auto da = a.total_degree();
    auto db = b.total_degree();
    if (da != db) return da > db;
  }
  for (Var v : precedence_) {
    if (a[v] != b[v]) return a[v] > b[v];
  }
  return false;
}

std::string MonomialOrder::describe() const {
  std::string s = kind_ == Kind::lex ? "lex(" : "grlex(";
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (i) s += '>';
    s += var_symbol(precedence_[i]);
  }
  s += ')';
  return s;
}

MissingVariable::MissingVariable(Var v)
    : std::invalid_argument(std::string("assignment is missing variable '") + var_symbol(v) + "'"),
      var_(v) {}

// ---- MultiPoly: construction and queries -------------------------------------

namespace {

using Accumulator = std::map<Monomial, Integer, CanonicalGreater>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back(Term{m, std::move(c)});
  return out;
}

}  // namespace

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, Integer(c)});
}

MultiPoly::MultiPoly(const Integer& c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, c});
}

MultiPoly MultiPoly::variable(Var v) { return monomial(Monomial::of(v), 1); }

MultiPoly MultiPoly::monomial(const Monomial& m, const Integer& c) {
  if (c == 0) return {};
  return MultiPoly(std::vector<Term>{Term{m, c}});
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  Accumulator acc;
  for (auto& t : terms) acc[t.monomial] += t.coefficient;
  return MultiPoly(drain(acc));
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_unit());
}

bool MultiPoly::contains(Var v) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.monomial[v] != 0; });
}

std::vector<Var> MultiPoly::variables() const {
  std::vector<Var> out;
  for (Var v : kAllVars)
    if (contains(v)) out.push_back(v);
  return out;
}

Degree MultiPoly::degree_in(Var v) const noexcept {
  if (terms_.empty()) return Degree::minus_infinity();
  Monomial::Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[v]);
  return Degree(d);
}

Degree MultiPoly::total_degree() const noexcept {
  if (terms_.empty()) return Degree::minus_infinity();
  // Canonical order is graded, so the first term has maximal total degree.
  return Degree(static_cast<std::uint32_t>(terms_.front().monomial.total_degree()));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  if (terms_.empty()) return {};
  std::vector<std::vector<Term>> buckets(degree_in(v).value() + 1);
  for (const auto& t : terms_) buckets[t.monomial[v]].push_back(Term{t.monomial.with(v, 0), t.coefficient});
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Integer MultiPoly::coefficient_of(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return canonical_greater(t.monomial, key); });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

Term MultiPoly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

Integer MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(terms_.front().coefficient) < 0) g = -g;
  return g;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return {};
  return divided_exactly(content());
}

MultiPoly MultiPoly::divided_exactly(const Integer& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term q{t.monomial, 0};
    mpz_divexact(q.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
    out.push_back(std::move(q));
  }
  return MultiPoly(std::move(out));
}

std::optional<MultiPoly> MultiPoly::try_exact_div(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return MultiPoly{};
  const Term& lead = d.terms_.front();
  Accumulator rem;
  for (const auto& t : terms_) rem.emplace(t.monomial, t.coefficient);
  std::vector<Term> quotient;
  Integer q;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.monomial.divides(top->first)) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coefficient.get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), top->second.get_mpz_t(), lead.coefficient.get_mpz_t());
    Monomial qm = top->first / lead.monomial;
    for (const auto& dt : d.terms_) {
      auto [it, inserted] = rem.try_emplace(qm * dt.monomial, 0);
      mpz_submul(it->second.get_mpz_t(), q.get_mpz_t(), dt.coefficient.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back(Term{qm, q});
  }
  return MultiPoly(std::move(quotient));
}

// ---- substitution -------------------------------------------------------------

MultiPoly MultiPoly::substitute(Var v, const Integer& value) const {
  if (!contains(v)) return *this;
  Accumulator acc;
  std::vector<Integer> powers{1};
  Integer scaled;
  for (const auto& t : terms_) {
    auto e = t.monomial[v];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    auto [it, inserted] = acc.try_emplace(t.monomial.with(v, 0), 0);
    mpz_addmul(it->second.get_mpz_t(), t.coefficient.get_mpz_t(), powers[e].get_mpz_t());
  }
  return MultiPoly(drain(acc));
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  if (!contains(v)) return *this;
  auto coeffs = coefficients_in(v);
  // Horner in v.
  MultiPoly r = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) r = r * value + coeffs[k];
  return r;
}

MultiPoly MultiPoly::substitute_cleared(Var v, const Rational& value) const {
  if (!contains(v)) return *this;
  const auto deg = degree_in(v).value();
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  std::vector<Integer> num_pow{1}, den_pow{1};
  for (std::uint32_t k = 0; k < deg; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Accumulator acc;
  Integer factor;
  for (const auto& t : terms_) {
    auto e = t.monomial[v];
    factor = num_pow[e] * den_pow[deg - e];
    auto [it, inserted] = acc.try_emplace(t.monomial.with(v, 0), 0);
    mpz_addmul(it->second.get_mpz_t(), t.coefficient.get_mpz_t(), factor.get_mpz_t());
  }
  return MultiPoly(drain(acc));
}

MultiPoly MultiPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto e = t.monomial[v];
    if (e == 0) continue;
    out.push_back(Term{t.monomial.with(v, e - 1), t.coefficient * e});
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

// ---- ring operations ------------------------------------------------------------

MultiPoly MultiPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coefficient = -t.coefficient;
  return MultiPoly(std::move(out));
}

namespace {

template <bool Subtract>
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_greater(b[j].monomial, a[i].monomial)) {
      out.push_back(Term{b[j].monomial, Subtract ? Integer(-b[j].coefficient) : b[j].coefficient});
      ++j;
    } else {
      Integer c = Subtract ? Integer(a[i].coefficient - b[j].coefficient)
                           : Integer(a[i].coefficient + b[j].coefficient);
      if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return MultiPoly(merge<false>(a.terms_, b.terms_)); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return MultiPoly(merge<true>(a.terms_, b.terms_)); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && b.terms_.front().monomial.is_unit()) return a * b.terms_.front().coefficient;
  if (a.terms_.size() == 1 && a.terms_.front().monomial.is_unit()) return b * a.terms_.front().coefficient;
  Accumulator acc;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ta.monomial * tb.monomial, 0);
      mpz_addmul(it->second.get_mpz_t(), ta.coefficient.get_mpz_t(), tb.coefficient.get_mpz_t());
    }
  }
  return MultiPoly(drain(acc));
}

MultiPoly operator*(const MultiPoly& a, const Integer& c) {
  if (c == 0) return {};
  std::vector<Term> out = a.terms_;
  for (auto& t : out) t.coefficient *= c;
  return MultiPoly(std::move(out));
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly neg(const MultiPoly& a) { return -a; }

// ---- evaluation -------------------------------------------------------------------

Rational eval_exact(const MultiPoly& p, const RationalAssignment& at) {
  for (Var v : p.variables())
    if (!at[index_of(v)]) throw MissingVariable(v);
  std::array<std::vector<Rational>, kVarCount> powers;
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational term(t.coefficient);
    for (Var v : kAllVars) {
      auto e = t.monomial[v];
      if (e == 0) continue;
      auto& pw = powers[index_of(v)];
      if (pw.empty()) pw.push_back(Rational(1));
      while (pw.size() <= e) pw.push_back(pw.back() * *at[index_of(v)]);
      term *= pw[e];
    }
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

double eval_float(const MultiPoly& p, const FloatAssignment& at) {
  for (Var v : p.variables())
    if (!at[index_of(v)]) throw MissingVariable(v);
  std::array<std::vector<long double>, kVarCount> powers;
  long double sum = 0.0L;
  long double compensation = 0.0L;
  for (const auto& t : p.terms()) {
    long exp2 = 0;
    long double term = static_cast<long double>(mpz_get_d_2exp(&exp2, t.coefficient.get_mpz_t()));
    term = std::ldexp(term, static_cast<int>(exp2));
    for (Var v : kAllVars) {
      auto e = t.monomial[v];
      if (e == 0) continue;
      auto& pw = powers[index_of(v)];
      if (pw.empty()) pw.push_back(1.0L);
      while (pw.size() <= e) pw.push_back(pw.back() * static_cast<long double>(*at[index_of(v)]));
      term *= pw[e];
    }
    // Neumaier summation.
    long double s = sum + term;
    if (std::fabs(sum) >= std::fabs(term))
      compensation += (sum - s) + term;
    else
      compensation += (term - s) + sum;
    sum = s;
  }
  return static_cast<double>(sum + compensation);
}

}  // namespace xraypent
