#include "nilzeta/render.hpp"

#include <algorithm>
#include <sstream>

namespace nilzeta {

namespace {

std::string latex_rational_number(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

// Monomial without coefficient, empty for the unit monomial.
std::string latex_monomial(const std::vector<std::string>& names, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += names[i];
    if (e[i] != 1) out += "^{" + std::to_string(e[i]) + "}";
  }
  return out;
}

bool later_variables_first(const Exponent& a, const Exponent& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::string power(const std::string& base, int k) {
  return k == 1 ? base : base + "^{" + std::to_string(k) + "}";
}

}  // namespace

std::string latex_polynomial(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  auto terms = p.terms();
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return later_variables_first(a.first, b.first);
  });
  const auto& names = p.arena()->names();
  std::string out;
  for (const auto& [e, c] : terms) {
    const std::string mono = latex_monomial(names, e);
    const Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += latex_rational_number(mag);
    } else {
      if (mag != 1) out += latex_rational_number(mag) + " ";
      out += mono;
    }
  }
  return out;
}

std::string latex_rational(const Frf& f) {
  if (f.is_zero()) return "0";
  const auto& names = f.arena()->names();
  Exponent shift = f.numerator().min_exponent();
  for (auto& x : shift) x = std::min(x, 0);
  Exponent back = shift;
  for (auto& x : back) x = -x;
  const LaurentPolynomial num = f.numerator().shifted(back);

  std::vector<std::pair<Exponent, int>> factors(f.denominator().begin(), f.denominator().end());
  std::stable_sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    return a.first > b.first;
  });
  std::string den;
  for (const auto& [e, k] : factors) {
    if (!den.empty()) den += " ";
    den += power("(1 - " + latex_monomial(names, e) + ")", k);
  }
  const std::string prefix = latex_monomial(names, shift);
  std::string body = den.empty() ? latex_polynomial(num)
                                 : "\\frac{" + latex_polynomial(num) + "}{" + den + "}";
  return prefix.empty() ? body : prefix + " \\cdot " + body;
}

std::string latex_linear(const Lff& f) {
  if (f.is_zero()) return "0";
  std::string num;
  const auto& coeffs = f.numerator().coefficients();
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (num.empty()) {
      if (c < 0) num += "-";
    } else {
      num += c < 0 ? " - " : " + ";
    }
    const std::string mono = k == 0 ? "" : k == 1 ? "s" : "s^{" + std::to_string(k) + "}";
    if (mono.empty()) {
      num += latex_rational_number(mag);
    } else {
      if (mag != 1) num += latex_rational_number(mag) + " ";
      num += mono;
    }
  }
  std::vector<std::pair<Lff::Factor, int>> factors(f.denominator().begin(),
                                                   f.denominator().end());
  std::stable_sort(factors.begin(), factors.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::string den;
  for (const auto& [ab, k] : factors) {
    const auto [a, b] = ab;
    std::string lin = (b == 1 ? "" : std::to_string(b)) + "s";
    if (a > 0) lin += " - " + std::to_string(a);
    if (a < 0) lin += " + " + std::to_string(-a);
    if (!den.empty()) den += " ";
    den += a == 0 && b == 1 ? power("s", k) : power("(" + lin + ")", k);
  }
  return den.empty() ? num : "\\frac{" + num + "}{" + den + "}";
}

std::string latex_zeta(const ZetaResult& r) {
  return std::holds_alternative<Frf>(r.value) ? latex_rational(r.rational())
                                              : latex_linear(r.topological());
}

std::string text_zeta(const ZetaResult& r) {
  std::ostringstream os;
  os << "d = " << r.d << ", kind = " << kind_name(r.kind);
  if (!r.word.empty()) os << ", word = " << r.word;
  os << "\n";
  if (std::holds_alternative<Frf>(r.value)) {
    os << r.rational().to_string() << "\n";
  } else {
    os << r.topological().to_string() << "\n";
  }
  return os.str();
}

}  // namespace nilzeta
