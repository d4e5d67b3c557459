#include "xraypent/eliminate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace xraypent {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix shape must be positive");
}

PolyMatrix PolyMatrix::substitute(Var v, const Integer& value) const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].substitute(v, value);
  return out;
}

LinearSolution::LinearSolution(Var var, MultiPoly a_coef, MultiPoly b_coef)
    : var_(var), a_(std::move(a_coef)), b_(std::move(b_coef)) {
  if (a_.is_zero()) throw std::invalid_argument("linear solution needs a nonzero coefficient");
  if (a_.contains(var_) || b_.contains(var_))
    throw std::invalid_argument("linear solution coefficients must not contain the solved variable");
}

LinearSolution LinearSolution::solve_for(const MultiPoly& p, Var var) {
  if (p.degree_in(var) != Degree(1)) throw std::invalid_argument("polynomial is not linear in the variable");
  auto c = p.coefficients_in(var);
  return {var, c[1], c[0]};
}

std::string_view backend_name(DetBackend b) noexcept {
  switch (b) {
    case DetBackend::automatic: return "auto";
    case DetBackend::bareiss: return "bareiss";
    case DetBackend::eval_interp: return "evalinterp";
  }
  return "?";
}

std::optional<DetBackend> backend_from_name(std::string_view name) noexcept {
  for (auto b : {DetBackend::automatic, DetBackend::bareiss, DetBackend::eval_interp})
    if (backend_name(b) == name) return b;
  return std::nullopt;
}

PolyMatrix sylvester(const MultiPoly& f, const MultiPoly& g, Var var) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("sylvester matrix of a zero polynomial");
  const auto m = f.degree_in(var).value();
  const auto n = g.degree_in(var).value();
  if (m == 0 && n == 0) throw std::invalid_argument("nothing to eliminate: both degrees are zero");
  const std::size_t size = m + n;
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  PolyMatrix s(size, size);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = fc[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = gc[n - k];
  return s;
}

// ---- integer kernel ------------------------------------------------------------

Integer det_bareiss(std::vector<Integer> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("det_bareiss: entry count does not match shape");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    const Integer& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a_ij = (a_ij * a_kk - a_ik * a_kj) / prev, exact.
        tmp = a[i * n + j] * pivot;
        mpz_submul(tmp.get_mpz_t(), a[i * n + k].get_mpz_t(), a[k * n + j].get_mpz_t());
        mpz_divexact(a[i * n + j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  Integer d = a[n * n - 1];
  return sign < 0 ? Integer(-d) : d;
}

// ---- symbolic Bareiss ------------------------------------------------------------

namespace {

MultiPoly det_symbolic_bareiss(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<MultiPoly> a(m.entries().begin(), m.entries().end());
  int sign = 1;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k].is_zero()) {
      // Prefer the sparsest available pivot.
      std::size_t best = n;
      for (std::size_t p = k + 1; p < n; ++p)
        if (!a[p * n + k].is_zero() && (best == n || a[p * n + k].term_count() < a[best * n + k].term_count()))
          best = p;
      if (best == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[best * n + c]);
      sign = -sign;
    }
    const MultiPoly pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        auto q = num.try_exact_div(prev);
        if (!q) throw std::logic_error("Bareiss step left a non-exact quotient");
        a[i * n + j] = std::move(*q);
      }
    }
    prev = pivot;
  }
  MultiPoly d = a[n * n - 1];
  return sign < 0 ? -d : d;
}

// ---- evaluation / interpolation ------------------------------------------------------

/// Coefficients (ascending) of the polynomial of degree <= bound through
/// (k, values[k]), k = 0..bound. The result must be integral.
std::vector<Integer> interpolate_at_naturals(const std::vector<Integer>& values) {
  const std::size_t count = values.size();
  std::vector<Rational> dd(values.begin(), values.end());
  // Newton divided differences with nodes 0, 1, ..., count-1.
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t i = count - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
      if (i == level) break;
    }
  // Expand the Newton form into monomial coefficients (Horner on nodes).
  std::vector<Rational> coeffs(count, Rational(0));
  for (std::size_t k = count; k-- > 0;) {
    // coeffs = coeffs * (t - k) + dd[k]
    for (std::size_t j = count - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - coeffs[j] * Rational(static_cast<long>(k));
    coeffs[0] = -coeffs[0] * Rational(static_cast<long>(k)) + dd[k];
  }
  std::vector<Integer> out;
  out.reserve(count);
  for (auto& c : coeffs) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("interpolation produced a non-integral coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

MultiPoly det_eval_interp(const PolyMatrix& m, const std::vector<std::pair<Var, std::uint32_t>>& plan, std::size_t level,
                          unsigned workers) {
  if (level == plan.size()) {
    std::vector<Integer> ints;
    ints.reserve(m.entries().size());
    for (const auto& e : m.entries()) {
      if (e.is_zero()) {
        ints.emplace_back(0);
      } else {
        if (!e.is_constant()) throw std::logic_error("evaluation plan left a free variable");
        ints.push_back(e.terms().front().coefficient);
      }
    }
    return MultiPoly(det_bareiss(std::move(ints), m.rows()));
  }
  const auto [var, bound] = plan[level];
  std::vector<MultiPoly> samples(bound + 1);
  auto work = [&](std::size_t k) {
    samples[k] = det_eval_interp(m.substitute(var, Integer(static_cast<unsigned long>(k))), plan, level + 1, 1);
  };
  if (workers > 1 && samples.size() > 1) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(workers, static_cast<unsigned>(samples.size()));
    for (unsigned t = 0; t < count; ++t)
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < samples.size(); k = next++) work(k);
      });
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t k = 0; k < samples.size(); ++k) work(k);
  }
  // Interpolate coefficient-wise over every monomial in the remaining variables.
  std::map<Monomial, std::vector<Integer>, CanonicalGreater> series;
  for (std::size_t k = 0; k < samples.size(); ++k)
    for (const auto& t : samples[k].terms()) {
      auto& s = series[t.monomial];
      if (s.empty()) s.assign(samples.size(), Integer(0));
      s[k] = t.coefficient;
    }
  std::vector<Term> terms;
  for (const auto& [mono, values] : series) {
    auto coeffs = interpolate_at_naturals(values);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (coeffs[j] != 0) terms.push_back(Term{mono.with(var, static_cast<Monomial::Exponent>(j)), coeffs[j]});
  }
  return MultiPoly::from_terms(std::move(terms));
}

constexpr std::size_t kMaxGridPoints = 2'000'000;

std::size_t grid_size(const std::array<Degree, kVarCount>& bounds) {
  std::size_t total = 1;
  for (const auto& b : bounds) {
    if (b.is_minus_infinity()) continue;
    total *= b.value() + 1;
    if (total > kMaxGridPoints) return total;
  }
  return total;
}

}  // namespace

std::array<Degree, kVarCount> det_degree_bounds(const PolyMatrix& m) {
  std::array<Degree, kVarCount> out;
  out.fill(Degree::minus_infinity());
  for (Var v : kAllVars) {
    std::uint64_t by_rows = 0, by_cols = 0;
    bool zero_line = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Degree best = Degree::minus_infinity();
      for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, m(r, c).degree_in(v));
      if (best.is_minus_infinity()) zero_line = true; else by_rows += best.value();
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Degree best = Degree::minus_infinity();
      for (std::size_t r = 0; r < m.rows(); ++r) best = std::max(best, m(r, c).degree_in(v));
      if (best.is_minus_infinity()) zero_line = true; else by_cols += best.value();
    }
    if (!zero_line) out[index_of(v)] = Degree(static_cast<std::uint32_t>(std::min(by_rows, by_cols)));
  }
  return out;
}

DetBackend resolve_backend(const PolyMatrix& m, DetBackend requested) {
  if (requested != DetBackend::automatic) return requested;
  bool all_constant = std::all_of(m.entries().begin(), m.entries().end(), [](const MultiPoly& e) { return e.is_constant(); });
  if (all_constant || m.rows() <= 3) return DetBackend::bareiss;
  return grid_size(det_degree_bounds(m)) <= kMaxGridPoints ? DetBackend::eval_interp : DetBackend::bareiss;
}

MultiPoly det_fraction_free(const PolyMatrix& m, DetOptions options) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const DetBackend backend = resolve_backend(m, options.backend);
  if (backend == DetBackend::bareiss) return det_symbolic_bareiss(m);

  auto bounds = det_degree_bounds(m);
  std::vector<std::pair<Var, std::uint32_t>> plan;
  for (Var v : kAllVars) {
    bool used = std::any_of(m.entries().begin(), m.entries().end(), [v](const MultiPoly& e) { return e.contains(v); });
    if (!used) continue;
    // A line of zeros: the determinant vanishes.
    if (bounds[index_of(v)].is_minus_infinity()) return {};
    plan.emplace_back(v, bounds[index_of(v)].value());
  }
  if (grid_size(bounds) > kMaxGridPoints) throw std::length_error("evaluation grid too large; use the bareiss backend");
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  return det_eval_interp(m, plan, 0, workers);
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var var, DetOptions options) {
  return det_fraction_free(sylvester(f, g, var), options);
}

ResultantReport resultant_report(const MultiPoly& f, const MultiPoly& g, Var var, DetOptions options) {
  ResultantReport report;
  report.value = resultant(f, g, var, options);
  if (!report.value.is_zero()) return report;
  report.common_factor_suspected = true;
  // Probe low-degree candidates for a shared factor, then retry once.
  std::vector<MultiPoly> candidates;
  const MultiPoly t = MultiPoly::variable(var);
  for (long c = -2; c <= 2; ++c) candidates.push_back(t - MultiPoly(c));
  for (Var other : kAllVars)
    if (other != var) candidates.push_back(MultiPoly::variable(other));
  MultiPoly removed(1);
  MultiPoly ff = f, gg = g;
  for (const auto& cand : candidates) {
    for (;;) {
      auto qf = ff.try_exact_div(cand);
      auto qg = gg.try_exact_div(cand);
      if (!qf || !qg || qf->is_zero()) break;
      ff = std::move(*qf);
      gg = std::move(*qg);
      removed *= cand;
    }
  }
  if (removed == MultiPoly(1)) return report;
  report.removed_factor = removed;
  if (ff.degree_in(var) == Degree(0) && gg.degree_in(var) == Degree(0)) return report;
  report.retried_value = resultant(ff, gg, var, options);
  return report;
}

Term sylvester_diagonal_term(const MultiPoly& f, const MultiPoly& g, Var var, const MonomialOrder& order) {
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  if (fc.empty() || gc.empty()) throw std::invalid_argument("diagonal term of a zero polynomial");
  const unsigned m = static_cast<unsigned>(fc.size() - 1);
  const unsigned n = static_cast<unsigned>(gc.size() - 1);
  const MultiPoly product = fc.back().pow(n) * gc.front().pow(m);
  return product.leading_term(order);
}

MultiPoly substitute_linear(const MultiPoly& target, const LinearSolution& sol) {
  auto coeffs = target.coefficients_in(sol.var());
  if (coeffs.empty()) return {};
  const std::size_t d = coeffs.size() - 1;
  const MultiPoly minus_b = -sol.b_coef();
  // sum_k c_k (-B)^k A^(d-k), Horner-style: ((c_d)(-B) + c_{d-1} A)(-B) + ...
  std::vector<MultiPoly> a_pow{MultiPoly(1)};
  for (std::size_t k = 1; k <= d; ++k) a_pow.push_back(a_pow.back() * sol.a_coef());
  MultiPoly result;
  MultiPoly b_pow(1);
  for (std::size_t k = 0; k <= d; ++k) {
    if (!coeffs[k].is_zero()) result += coeffs[k] * b_pow * a_pow[d - k];
    if (k < d) b_pow = b_pow * minus_b;
  }
  return result;
}

}  // namespace xraypent
