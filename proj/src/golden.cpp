#include "nilzeta/golden.hpp"

#include <algorithm>
#include <tuple>

namespace nilzeta {

namespace {

using P = LaurentPolynomial;

// Polynomial in (q, t) from (coefficient, q-exponent, t-exponent) triples.
P qt_poly(const std::vector<std::tuple<long, int, int>>& terms) {
  std::vector<P::Term> out;
  for (const auto& [c, a, b] : terms) out.emplace_back(Exponent{a, b}, Rational(c));
  return P(qt_arena(), std::move(out));
}

// Polynomial in t from coefficients of t^0, t^1, ...
P t_poly(const std::vector<long>& coeffs) {
  std::vector<P::Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out.emplace_back(Exponent{static_cast<int>(k)}, Rational(coeffs[k]));
  }
  return P(t_arena(), std::move(out));
}

// Palindromic coefficient list from its first half including the middle.
std::vector<long> palindrome(std::vector<long> half) {
  std::vector<long> out = half;
  for (std::size_t k = half.size() - 1; k-- > 0;) out.push_back(half[k]);
  return out;
}

Frf qt_frac(P num, const std::vector<std::tuple<int, int, int>>& den) {
  Frf::Denominator d;
  for (const auto& [a, b, k] : den) d[Exponent{a, b}] += k;
  return Frf(std::move(num), std::move(d));
}

Frf t_frac(P num, const std::vector<std::pair<int, int>>& den) {
  Frf::Denominator d;
  for (const auto& [b, k] : den) d[Exponent{b}] += k;
  return Frf(std::move(num), std::move(d));
}

// Numerator coefficients over the given linear factors (b s - a)^k.
Lff top_frac(const std::vector<Rational>& coeffs, const Rational& scale,
             const std::vector<std::tuple<long, long, int>>& den) {
  std::vector<Rational> c;
  for (const auto& x : coeffs) c.push_back(x / scale);
  Lff::Denominator d;
  for (const auto& [b, a, k] : den) d[{a, b}] += k;
  return lf_normalize(Lff(UnivariatePolynomial(std::move(c)), std::move(d)));
}

Frf padic_d2() {
  return qt_frac(qt_poly({{1, 0, 0}, {-1, 3, 3}}),
                 {{3, 2, 1}, {2, 2, 1}, {0, 1, 1}, {1, 1, 1}});
}

Frf padic_d3() {
  P w = qt_poly({{1, 0, 0},   {1, 3, 2},   {1, 4, 2},   {1, 5, 2},
                 {-1, 4, 3},  {-1, 5, 3},  {-1, 6, 3},  {-1, 7, 4},
                 {-1, 9, 4},  {-1, 10, 5}, {-1, 11, 5}, {-1, 12, 5},
                 {1, 11, 6},  {1, 12, 6},  {1, 13, 6},  {1, 16, 8}});
  P num = w.times_binomial({8, 4});
  // The printed form omits (1 - q^8 t^3). Without it the functional
  // equation fails, the t^3 coefficient disagrees with a brute-force count,
  // and q = 1 does not give the printed reduced form.
  return qt_frac(std::move(num), {{8, 3, 1},
                                  {0, 1, 1},
                                  {1, 1, 1},
                                  {2, 1, 1},
                                  {4, 2, 1},
                                  {5, 2, 1},
                                  {6, 2, 1},
                                  {6, 3, 1},
                                  {7, 3, 1}});
}

Frf reduced_d2() { return t_frac(t_poly({1, 1, 1}), {{2, 2}, {1, 1}}); }

Frf reduced_d3() {
  return t_frac(t_poly({1, 2, 7, 9, 12, 9, 7, 2, 1}), {{3, 3}, {2, 2}, {1, 1}});
}

Frf reduced_d4() {
  return t_frac(t_poly(palindrome({1, 2, 15, 30, 87, 156, 284, 414, 562, 658, 703})),
                {{1, 2}, {3, 4}, {4, 4}});
}

Frf reduced_d5() {
  return t_frac(
      t_poly(palindrome({1,       4,       30,      115,     431,     1330,
                         3709,    9185,    20876,   43410,   83737,   150127,
                         252056,  397040,  589457,  826057,  1095916, 1377780,
                         1644507, 1864452, 2010117, 2060784})),
      {{5, 5}, {3, 5}, {4, 4}, {1, 1}});
}

Lff top_d2() { return top_frac({3}, 2, {{2, 3, 1}, {1, 1, 1}, {1, 0, 1}}); }

Lff top_d3() {
  return top_frac({84, -94, 25}, 3,
                  {{3, 7, 1},
                   {3, 8, 1},
                   {2, 5, 1},
                   {1, 1, 1},
                   {1, 2, 2},
                   {1, 3, 1},
                   {1, 0, 1}});
}

Lff top_d4() {
  // Coefficients of s^0 .. s^13.
  std::vector<Rational> num = {
      Rational(Integer("-639268261271640000")),
      Rational(Integer("2230351512292203300")),
      Rational(Integer("-3584726815997417886")),
      Rational(Integer("3514612915281294714")),
      Rational(Integer("-2345400850582061927")),
      Rational(Integer("1125038325014124489")),
      Rational(Integer("-399106101276334990")),
      Rational(Integer("106022910302150804")),
      Rational(Integer("-21092307321737791")),
      Rational(Integer("3103756047141233")),
      Rational(Integer("-328379597912246")),
      Rational(Integer("23656166485364")),
      Rational(Integer("-1040066363064")),
      Rational(Integer("21078036000")),
  };
  return top_frac(num, 168,
                  {{7, 25, 1},  {7, 27, 1}, {6, 25, 1}, {5, 21, 1}, {5, 22, 2},
                   {4, 13, 1},  {4, 15, 1}, {4, 17, 1}, {3, 11, 1}, {3, 13, 2},
                   {2, 7, 1},   {2, 9, 2},  {1, 1, 1},  {1, 3, 2},  {1, 4, 4},
                   {1, 0, 1}});
}

}  // namespace

std::optional<Frf> golden_rational(int d, ZetaKind kind) {
  switch (kind) {
    case ZetaKind::padic:
      if (d == 2) return padic_d2();
      if (d == 3) return padic_d3();
      return std::nullopt;
    case ZetaKind::reduced:
      if (d == 2) return reduced_d2();
      if (d == 3) return reduced_d3();
      if (d == 4) return reduced_d4();
      if (d == 5) return reduced_d5();
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<Lff> golden_topological(int d) {
  if (d == 2) return top_d2();
  if (d == 3) return top_d3();
  if (d == 4) return top_d4();
  return std::nullopt;
}

std::optional<Rational> golden_c(int d) {
  switch (d) {
    case 2: return Rational(3, 4);
    case 3: return Rational(25, 54);
    case 4: return Rational(569, 2304);
    case 5: return Rational(3800243, 32400000);
    case 6: return Rational(8743819, 172800000);
    default: return std::nullopt;
  }
}

Frf golden_padic_d3_as_printed() {
  Frf f = padic_d3();
  Frf::Denominator den = f.denominator();
  den.erase(Exponent{8, 3});
  return Frf(f.numerator(), std::move(den));
}

std::vector<std::pair<int, int>> golden_padic_denominator_d4() {
  return {{27, 7}, {25, 7}, {25, 6}, {28, 7}, {22, 5}, {22, 5}, {21, 5}, {17, 4},
          {15, 4}, {13, 4}, {26, 6}, {13, 3}, {11, 3}, {18, 4}, {9, 2},  {12, 3},
          {24, 6}, {16, 4}, {14, 4}, {9, 3},  {12, 4}, {1, 1},  {0, 1}};
}

std::optional<LaurentPolynomial> numerator_over(const Frf& f,
                                                const Frf::Denominator& den) {
  Frf::Denominator extra_den = den;   // factors of den not in f's denominator
  Frf::Denominator extra_f;           // factors of f's denominator not in den
  for (const auto& [e, k] : f.denominator()) {
    auto it = extra_den.find(e);
    const int have = it == extra_den.end() ? 0 : it->second;
    const int common = std::min(have, k);
    if (common > 0) {
      it->second -= common;
      if (it->second == 0) extra_den.erase(it);
    }
    if (k > common) extra_f[e] = k - common;
  }
  LaurentPolynomial n = f.numerator();
  for (const auto& [e, k] : extra_den) n = n.times_binomial(e, k);
  for (const auto& [e, k] : extra_f) {
    for (int i = 0; i < k; ++i) {
      auto q = n.divide_binomial(e);
      if (!q) return std::nullopt;
      n = std::move(*q);
    }
  }
  return n;
}

bool has_minimal_denominator(const Frf& f, const Frf::Denominator& den) {
  auto n = numerator_over(f, den);
  if (!n) return false;
  for (const auto& entry : den) {
    if (n->divide_binomial(entry.first)) return false;
  }
  return true;
}

}  // namespace nilzeta
