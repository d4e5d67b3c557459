#include "xraypent/paper_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace xraypent {

namespace {

// Equations as printed, bracketed blocks multiplied out in reading order.
constexpr std::string_view kP1 =
    "w - w*v - x*y - u*y - w*y";

constexpr std::string_view kP2 =
    "u + w - x";

constexpr std::string_view kP3 =
    "v - 2*u*v - x*v + 2*u - 2*y*u - 2*z*u - w*v + 1 + y + z + x - x*y - x*z + w - y*w - z*w";

constexpr std::string_view kP4 =
    "1 - 2*u - v + 2*u*v - 2*x*y - z + z*w + 2*z*u + u^2 - u^2*v + 2*x*y*u - z*w*u - z*u^2 - w "
    "+ w*u + w*v - u*v*w + x*y*w";

constexpr std::string_view kP5 =
    "-y + 2*y*u - y*u^2 + x*y - x*y*u - x*y*w + w - u*w - z*w + z*w*u";

constexpr std::string_view kP6 =
    "z*w - y*u - v*w";

constexpr std::string_view kQ1 =
    "y*v - 3*y*u*v + y*u^2*v - 3*x*y*v + 3*x*y*u*v + u*v - y + 2*y*u + 3*x*y - 3*x*y*u "
    "- 2*x^2*y^2 - u";

constexpr std::string_view kQ2 =
    "-4*x*v^2 + 7*x*u*v^2 + 4*x^2*v^2 - 2*u^2*v^2 + u*v^2 - 10*x*u*v - 2*x^2*v + 4*u^2*v "
    "- 2*u*v - 2*x*y*v + 6*x*y*u*v - 6*x^2*y*v + 3*x*u - 2*u^2 + 2*x^2*y + 2*x + 2*x*y + u "
    "+ 2*x^2 - 6*x*y*u - 4*x^2*y^2";

constexpr std::string_view kQ3 =
    "4*x*v^2 - 8*x*u*v^2 - u*v^2 + 2*u^2*v^2 + 4*x*u^2*v^2 - u^3*v^2 - 6*x*v + 12*x*u*v "
    "+ 2*u*v - 4*u^2*v - 6*x*u^2*v + 2*u^3*v + 12*x^2*y*v - 12*x^2*y*u*v - 2*x*y*u*v "
    "+ 2*x*y*u^2*v + 2*x - 4*x*u - 8*x^2*y - u + 2*u^2 + 2*x*u^2 + 8*x^2*y*u - u^3 + 2*x*y*u "
    "- 2*x*y*u^2 + 4*x^3*y^2";

constexpr std::string_view kR1 =
    "-2*y^2*u^6 + 5*y^2*u^5 - 11*x*y^2*u^5 - 6*x*y^3*u^5 - 4*y^2*u^4 - 4*x*y*u^4 "
    "- 10*x^2*y^2*u^4 - 8*x^2*y^3*u^4 - 2*x*y^2*u^4 + 26*x*y^3*u^4 - 4*x^2*y^4*u^4 + y^2*u^3 "
    "+ 26*x^2*y^2*u^3 + 8*x*y*u^3 - 13*x*y^2*u^3 - 32*x*y^3*u^3 + 6*x^3*y^2*u^3 + 2*x^2*y*u^3 "
    "- 26*x^3*y^3*u^3 + 22*x^2*y^3*u^3 - 12*x^3*y^4*u^3 + 24*x^2*y^4*u^3 - 16*x^4*y^3*u^2 "
    "+ 8*x*y^2*u^2 + 14*x*y^3*u^2 + 24*x^3*y*u^2 + 36*x^4*y^2*u^2 + 4*x^2*u^2 - 34*x^2*y*u^2 "
    "+ 4*x*y*u^2 - 2*x*u^2 - 94*x^3*y^2*u^2 + 52*x^3*y^3*u^2 + 26*x^2*y^2*u^2 - 22*x^2*y^3*u^2 "
    "+ 56*x^3*y^4*u^2 - 20*x^4*y^4*u^2 - 44*x^2*y^4*u^2 + 36*x^5*y^3*u - 8*x^5*y^4*u "
    "- 32*x^4*y^3*u - 2*x*y^3*u - 60*x^4*y^2*u - 24*x^3*y*u + 122*x^3*y^2*u + 20*x^2*y*u "
    "- 4*x*y*u + 4*x*y^2*u - 18*x^3*y^3*u - 50*x^2*y^2*u + 16*x^2*y^3*u + 64*x^4*y^4*u "
    "- 72*x^3*y^4*u + 24*x^2*y^4*u + 16*x^6*y^4 - 36*x^5*y^3 + 60*x^4*y^3 + 20*x^5*y^4 "
    "+ 36*x^4*y^2 + 16*x^2*y^2 - 42*x^3*y^2 - 2*x*y^2 + 8*x^3*y^3 - 36*x^4*y^3 - 4*x^2*y^3 "
    "+ 20*x^3*y^4 - 36*x^4*y^4 - 4*x^2*y^4";

constexpr std::string_view kR2 =
    "-y*u^7 + 4*y*u^6 + 2*x*y*u^6 - 2*x*y^2*u^6 - 6*y*u^5 - 6*x^2*y*u^5 - 2*x*u^5 - 6*x*y*u^5 "
    "+ 10*x*y^2*u^5 + 6*x^2*y^2*u^5 + 4*y*u^4 + 6*x*u^4 + 2*x*y*u^4 - 16*x*y^2*u^4 "
    "+ 28*x^2*y*u^4 - 26*x^2*y^2*u^4 + 8*x^3*y^3*u^4 - y*u^3 - 28*x^2*y*u^3 - 6*x*u^3 "
    "+ 8*x*y*u^3 + 10*x*y^2*u^3 + 22*x^2*y^2*u^3 - 24*x^4*y^2*u^3 - 4*x^2*u^3 - 20*x^3*y*u^3 "
    "+ 8*x^4*y^3*u^3 + 52*x^3*y^2*u^3 - 40*x^3*y^3*u^3 + 4*x^2*y*u^2 + 2*x*u^2 - 8*x*y*u^2 "
    "- 20*x^5*y^3*u^2 - 2*x*y^2*u^2 + 44*x^3*y*u^2 - 128*x^3*y^2*u^2 + 72*x^4*y^2*u^2 "
    "+ 4*x^2*u^2 + 10*x^2*y^2*u^2 - 16*x^4*y^3*u^2 + 60*x^3*y^3*u^2 + 2*x*y*u + 40*x^5*y^3*u "
    "- 72*x^4*y^2*u - 20*x^3*y*u - 16*x^2*y^2*u + 88*x^3*y^2*u - 28*x^3*y^3*u + 8*x^4*y^3*u "
    "+ 2*x^2*y*u + 4*x^3*y^3 + 4*x^2*y^2 + 24*x^4*y^2 - 20*x^3*y^2 - 20*x^5*y^3";

MultiPoly P(std::string_view text) { return parse_poly(text); }

SystemEquation make(EquationTag tag, std::string_view text, std::vector<std::string_view> side = {}) {
  SystemEquation eq{tag, P(text), {}};
  for (auto s : side) eq.nonvanishing.push_back(P(s));
  return eq;
}

}  // namespace

std::string_view tag_name(EquationTag tag) noexcept {
  switch (tag) {
    case EquationTag::B1B5: return "B1B5";
    case EquationTag::C1C5: return "C1C5";
    case EquationTag::D1D5: return "D1D5";
    case EquationTag::E2A2: return "E2A2";
    case EquationTag::E3A3: return "E3A3";
    case EquationTag::E4A4: return "E4A4";
    case EquationTag::Q1: return "Q1";
    case EquationTag::Q2: return "Q2";
    case EquationTag::Q3: return "Q3";
    case EquationTag::R1: return "R1";
    case EquationTag::R2: return "R2";
  }
  return "?";
}

std::string_view transcription(EquationTag tag) {
  switch (tag) {
    case EquationTag::B1B5: return kP1;
    case EquationTag::C1C5: return kP2;
    case EquationTag::D1D5: return kP3;
    case EquationTag::E2A2: return kP4;
    case EquationTag::E3A3: return kP5;
    case EquationTag::E4A4: return kP6;
    case EquationTag::Q1: return kQ1;
    case EquationTag::Q2: return kQ2;
    case EquationTag::Q3: return kQ3;
    case EquationTag::R1: return kR1;
    case EquationTag::R2: return kR2;
  }
  throw std::invalid_argument("unknown equation tag");
}

const std::vector<SystemEquation>& pentagon_system() {
  static const std::vector<SystemEquation> eqs{
      make(EquationTag::B1B5, kP1, {"1 - v"}),
      make(EquationTag::C1C5, kP2, {"1 - v", "1 - v - y - z"}),
      make(EquationTag::D1D5, kP3, {"1 - y - z"}),
      make(EquationTag::E2A2, kP4, {"1 - u", "1 - w - u"}),
      make(EquationTag::E3A3, kP5, {"1 - u", "1 - x - u"}),
      make(EquationTag::E4A4, kP6, {"u + w"}),
  };
  return eqs;
}

const std::vector<SystemEquation>& derived_stage1() {
  static const std::vector<SystemEquation> eqs{
      make(EquationTag::Q1, kQ1), make(EquationTag::Q2, kQ2), make(EquationTag::Q3, kQ3)};
  return eqs;
}

const std::vector<SystemEquation>& derived_stage2() {
  static const std::vector<SystemEquation> eqs{make(EquationTag::R1, kR1), make(EquationTag::R2, kR2)};
  return eqs;
}

const MultiPoly& equation(EquationTag tag) {
  const auto i = static_cast<std::size_t>(tag);
  if (i < 6) return pentagon_system()[i].poly;
  if (i < 9) return derived_stage1()[i - 6].poly;
  return derived_stage2()[i - 9].poly;
}

std::vector<MultiPoly> eliminate_zw() {
  const auto& sys = pentagon_system();
  // w = x - u from P2, then z from P6 (linear in z with coefficient w).
  const MultiPoly w_value = MultiPoly::variable(Var::x) - MultiPoly::variable(Var::u);
  const MultiPoly p6 = sys[5].poly.substitute(Var::w, w_value);
  const auto z_solution = LinearSolution::solve_for(p6, Var::z);

  std::vector<MultiPoly> out;
  for (std::size_t i : {0u, 2u, 3u, 4u}) {
    const MultiPoly no_w = sys[i].poly.substitute(Var::w, w_value);
    out.push_back(substitute_linear(no_w, z_solution).primitive_part());
  }
  return out;
}

LinearSolution q1_v_solution() { return LinearSolution::solve_for(equation(EquationTag::Q1), Var::v); }

std::vector<MultiPoly> eliminate_v() {
  const auto sol = q1_v_solution();
  return {substitute_linear(equation(EquationTag::Q2), sol).primitive_part(),
          substitute_linear(equation(EquationTag::Q3), sol).primitive_part()};
}

}  // namespace xraypent
