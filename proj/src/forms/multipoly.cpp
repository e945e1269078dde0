#include "folint/forms/multipoly.hpp"

namespace folint {

bool has_rational_coefficients(const KMultiPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.is_rational()) return false;
  return true;
}

QMultiPoly to_rational(const KMultiPoly& p) {
  QMultiPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_rational()) throw Error(ErrorKind::Unsupported, "polynomial has coefficients outside Q");
    r.add_term(e, c.rational_value());
  }
  return r;
}

std::string render_monomial(const Exponent& e, const std::array<std::string, 3>& names) {
  std::string out;
  for (size_t i = 0; i < 3; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

namespace {

void append_rational_term(std::string& out, const Rational& c, const std::string& mono) {
  const bool negative = sgn(c) < 0;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  const Rational mag = abs(c);
  if (mono.empty())
    out += mag.get_str();
  else if (mag == 1)
    out += mono;
  else
    out += mag.get_str() + "*" + mono;
}

}  // namespace

std::string render(const QMultiPoly& p, const std::array<std::string, 3>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) append_rational_term(out, c, render_monomial(e, names));
  return out;
}

std::string render(const KMultiPoly& p, const std::array<std::string, 3>& names, const std::string& generator) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const std::string mono = render_monomial(e, names);
    if (c.is_rational()) {
      append_rational_term(out, c.rational_value(), mono);
      continue;
    }
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c, generator) + ")";
    if (!mono.empty()) out += "*" + mono;
  }
  return out;
}

std::vector<Exponent> monomials_of_degree(int d) {
  std::vector<Exponent> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

}  // namespace folint
