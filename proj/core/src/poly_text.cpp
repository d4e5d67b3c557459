#include <cctype>
#include <limits>
#include <ostream>
#include <string>

#include "xraypent/poly.hpp"

namespace xraypent {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      // A leading sign applies to the first term, e.g. "-u^7*y".
      negate = peek() == '-';
      ++pos_;
      skip_ws();
    }
    terms.push_back(parse_term(negate));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      terms.push_back(parse_term(c == '-'));
    }
    return MultiPoly::from_terms(std::move(terms));
  }

 private:
  Term parse_term(bool negate) {
    Term t{Monomial{}, 1};
    skip_ws();
    if (at_end()) fail("expected a term");
    char c = peek();
    bool signed_coeff = (c == '+' || c == '-') && next_is_digit();
    if (std::isdigit(static_cast<unsigned char>(c)) || signed_coeff) {
      t.coefficient = parse_integer();
      skip_ws();
      while (!at_end() && peek() == '*') {
        ++pos_;
        t.monomial = t.monomial * parse_varpow();
        skip_ws();
      }
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      t.monomial = parse_varpow();
      skip_ws();
      while (!at_end() && peek() == '*') {
        ++pos_;
        t.monomial = t.monomial * parse_varpow();
        skip_ws();
      }
    } else {
      fail("expected a coefficient or variable");
    }
    if (negate) t.coefficient = -t.coefficient;
    return t;
  }

  Monomial parse_varpow() {
    skip_ws();
    if (at_end()) fail("expected a variable");
    std::size_t start = pos_;
    char c = peek();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a variable");
    auto var = var_from_symbol(c);
    if (!var) fail(std::string("unknown variable '") + c + "'");
    ++pos_;
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("unknown variable (implicit multiplication is not allowed)", start);
    skip_ws();
    std::uint64_t exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t digits_at = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      exponent = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        exponent = exponent * 10 + static_cast<std::uint64_t>(peek() - '0');
        if (exponent > std::numeric_limits<Monomial::Exponent>::max())
          throw ParseError("exponent overflow", digits_at);
        ++pos_;
      }
    }
    return Monomial::of(*var, static_cast<Monomial::Exponent>(exponent));
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    std::string digits;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') digits += '-';
      ++pos_;
    }
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
    if (digits.empty() || digits == "-") throw ParseError("expected digits", start);
    return Integer(digits, 10);
  }

  bool next_is_digit() const {
    return pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_monomial(std::string& out, const Monomial& m) {
  bool first = true;
  for (Var v : kAllVars) {
    auto e = m[v];
    if (e == 0) continue;
    if (!first) out += '*';
    first = false;
    out += var_symbol(v);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
}

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Integer magnitude = abs(t.coefficient);
    if (t.monomial.is_unit()) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) {
      out += magnitude.get_str();
      out += '*';
    }
    append_monomial(out, t.monomial);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << format_poly(p); }

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s, std::size_t offset, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) throw ParseError("expected an integer", offset);
    for (std::size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("invalid character in rational", offset + k);
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
  };
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational", 0);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, 0, true));
  Integer num = parse_int(trim(s.substr(0, slash)), 0, true);
  Integer den = parse_int(trim(s.substr(slash + 1)), slash + 1, false);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace xraypent
