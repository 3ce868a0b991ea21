#include "doctest.h"

#include "nilzeta/golden.hpp"
#include "nilzeta/render.hpp"

using namespace nilzeta;

TEST_CASE("LaTeX of polynomials") {
  auto q = qt_arena();
  LaurentPolynomial p(q, {{{2, 1}, 3}, {{0, 0}, 1}, {{1, 0}, Rational(-1, 2)}, {{0, 1}, -1}});
  CHECK(latex_polynomial(p) == "1 - \\frac{1}{2} q - t + 3 q^{2} t");
  CHECK(latex_polynomial(LaurentPolynomial(q)) == "0");
}

TEST_CASE("LaTeX denominators are ordered by decreasing q-exponent") {
  auto q = qt_arena();
  Frf f(LaurentPolynomial::constant(q, 1), {{{0, 1}, 1}, {{3, 2}, 1}, {{1, 1}, 2}});
  CHECK(latex_rational(f) == "\\frac{1}{(1 - q^{3} t^{2}) (1 - q t)^{2} (1 - t)}");
}

TEST_CASE("negative numerator exponents move into a monomial prefactor") {
  auto q = qt_arena();
  LaurentPolynomial num(q, {{{-2, 0}, 1}, {{0, 1}, 1}});
  Frf f(num, {{{0, 1}, 1}});
  CHECK(latex_rational(f) == "q^{-2} \\cdot \\frac{1 + q^{2} t}{(1 - t)}");
}

TEST_CASE("LaTeX of topological zeta functions") {
  CHECK(latex_linear(*golden_topological(2)) == "\\frac{\\frac{3}{2}}{(2s - 3) (s - 1) s}");
}

TEST_CASE("text rendering names the kind and word") {
  ZetaResult r = zeta_overlap(2, "01");
  CHECK(text_zeta(r).rfind("d = 2, kind = overlap, word = 01\n", 0) == 0);
}
