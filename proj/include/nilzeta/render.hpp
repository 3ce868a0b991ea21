// LaTeX and plain-text renderings of zeta functions.
#pragma once

#include <string>

#include "nilzeta/zeta.hpp"

namespace nilzeta {

// Numerator terms ordered by the last variable, then the earlier ones.
std::string latex_polynomial(const LaurentPolynomial& p);
// A monomial prefactor absorbs negative numerator exponents; denominator
// factors (1 - Z^e)^k are ordered by decreasing exponent of the first
// variable, then of the later ones.
std::string latex_rational(const Frf& f);
// Denominator factors (b s - a)^k ordered by decreasing a, then b.
std::string latex_linear(const Lff& f);
std::string latex_zeta(const ZetaResult& r);

std::string text_zeta(const ZetaResult& r);

}  // namespace nilzeta
