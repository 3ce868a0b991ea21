// Published closed forms for small d, used as regression targets by the
// verification suites.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilzeta/arith.hpp"
#include "nilzeta/zeta.hpp"

namespace nilzeta {

// Full closed form, when one is known for (d, kind). Kinds padic, reduced
// and topological only.
std::optional<Frf> golden_rational(int d, ZetaKind kind);
std::optional<Lff> golden_topological(int d);
std::optional<Rational> golden_c(int d);

// The d = 3 p-adic closed form exactly as printed, one denominator factor
// short; kept so tests can show that it fails the consistency checks.
Frf golden_padic_d3_as_printed();

// The d = 4 p-adic denominator: (q-exponent, t-exponent) per factor
// (1 - q^a t^b), listed with multiplicity.
std::vector<std::pair<int, int>> golden_padic_denominator_d4();

// Numerator N with f = N / prod(1 - Z^e) over `den`, or nullopt when the
// product is not a denominator of f.
std::optional<LaurentPolynomial> numerator_over(const Frf& f,
                                                const Frf::Denominator& den);

// True when `den` is a denominator of f and no single factor of `den`
// cancels against the resulting numerator.
bool has_minimal_denominator(const Frf& f, const Frf::Denominator& den);

}  // namespace nilzeta
