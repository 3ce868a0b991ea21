#include "doctest.h"

#include <random>

#include "nilzeta/arith.hpp"
#include "nilzeta/serialize.hpp"

using namespace nilzeta;

namespace {

using P = LaurentPolynomial;

// Builds a (q, t) polynomial from {coeff, qexp, texp} triples.
P qt(std::initializer_list<std::tuple<long, int, int>> terms) {
  std::vector<P::Term> out;
  for (auto [c, a, b] : terms) out.emplace_back(Exponent{a, b}, Rational(c));
  return P(qt_arena(), std::move(out));
}

P tpoly(std::initializer_list<std::pair<long, int>> terms) {
  std::vector<P::Term> out;
  for (auto [c, a] : terms) out.emplace_back(Exponent{a}, Rational(c));
  return P(t_arena(), std::move(out));
}

Frf qt_frf(P num, std::initializer_list<std::tuple<int, int, int>> den) {
  Frf::Denominator d;
  for (auto [a, b, k] : den) d[Exponent{a, b}] += k;
  return Frf(std::move(num), std::move(d));
}

// The d = 2 closed form (1 - q^3 t^3) / ((1 - q^3 t^2)(1 - q^2 t^2)(1 - t)(1 - q t)).
Frf zeta_d2_shape() {
  return qt_frf(qt({{1, 0, 0}, {-1, 3, 3}}),
                {{3, 2, 1}, {2, 2, 1}, {0, 1, 1}, {1, 1, 1}});
}

P random_qt_poly(std::mt19937& rng, int terms, int max_exp, bool allow_neg) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> ex(allow_neg ? -2 : 0, max_exp);
  std::vector<P::Term> out;
  for (int i = 0; i < terms; ++i) {
    out.emplace_back(Exponent{ex(rng), ex(rng)}, Rational(coeff(rng)));
  }
  return P(qt_arena(), std::move(out));
}

Frf random_qt_frf(std::mt19937& rng) {
  std::uniform_int_distribution<int> ex(0, 2);
  std::uniform_int_distribution<int> nf(0, 3);
  Frf::Denominator den;
  const int n = nf(rng);
  for (int i = 0; i < n; ++i) {
    Exponent e{ex(rng), 1 + ex(rng)};
    den[e] += 1;
  }
  return Frf(random_qt_poly(rng, 4, 3, false), std::move(den));
}

// Naive truncated product of two coefficient lists.
std::vector<Rational> convolve(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST_CASE("poly_mul examples") {
  P one_qt = qt({{1, 0, 0}, {1, 1, 1}});
  CHECK(poly_mul(one_qt, P::constant(qt_arena(), 1)) == one_qt);
  CHECK(poly_mul(tpoly({{1, 0}, {-1, 1}}), tpoly({{1, 0}, {1, 1}})) ==
        tpoly({{1, 0}, {-1, 2}}));
  P a = P(q_arena(), {{Exponent{0}, 1}, {Exponent{-1}, 1}});
  P sq = poly_mul(a, a);
  CHECK(sq == P(q_arena(),
                {{Exponent{0}, 1}, {Exponent{-1}, 2}, {Exponent{-2}, 1}}));
}

TEST_CASE("poly_mul rejects mixed arenas") {
  CHECK_THROWS_AS(poly_mul(P::constant(qt_arena(), 1), P::constant(t_arena(), 1)),
                  StructuralError);
}

TEST_CASE("poly_exact_div examples") {
  auto r = poly_exact_div(tpoly({{1, 0}, {-1, 2}}), tpoly({{1, 0}, {-1, 1}}));
  REQUIRE(r);
  CHECK(*r == tpoly({{1, 0}, {1, 1}}));
  auto s = poly_exact_div(qt({{1, 0, 0}, {-1, 3, 3}}), qt({{1, 0, 0}, {-1, 1, 1}}));
  REQUIRE(s);
  CHECK(*s == qt({{1, 0, 0}, {1, 1, 1}, {1, 2, 2}}));
  CHECK(poly_mul(*s, qt({{1, 0, 0}, {-1, 1, 1}})) == qt({{1, 0, 0}, {-1, 3, 3}}));
  CHECK_FALSE(poly_exact_div(tpoly({{1, 0}, {1, 1}}), tpoly({{1, 0}, {-1, 1}})));
  CHECK_THROWS_AS(poly_exact_div(tpoly({{1, 0}}), P(t_arena())), DomainError);
}

TEST_CASE("poly_exact_div inverts poly_mul on random inputs") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    P a = random_qt_poly(rng, 5, 4, true);
    P b = random_qt_poly(rng, 3, 3, true);
    if (b.is_zero()) continue;
    auto q = poly_exact_div(poly_mul(a, b), b);
    REQUIRE(q);
    CHECK(*q == a);
  }
}

TEST_CASE("divide_binomial agrees with poly_exact_div") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    P a = random_qt_poly(rng, 4, 3, true);
    Exponent e{i % 3, 1 + i % 2};
    P prod = a.times_binomial(e);
    auto q = prod.divide_binomial(e);
    REQUIRE(q);
    CHECK(*q == a);
    auto r = poly_exact_div(prod, qt({{1, 0, 0}, {-1, e[0], e[1]}}));
    REQUIRE(r);
    CHECK(*r == a);
  }
  CHECK_FALSE(tpoly({{1, 0}, {1, 1}}).divide_binomial(Exponent{1}));
}

TEST_CASE("rf_add examples") {
  Frf f = qt_frf(qt({{1, 0, 0}}), {{0, 1, 1}});
  CHECK(rf_equal(rf_add(f, Frf(qt_arena())), f));
  Frf g = qt_frf(qt({{1, 0, 1}}), {{0, 1, 1}});
  Frf sum = rf_add(f, g);
  CHECK(rf_equal(sum, qt_frf(qt({{1, 0, 0}, {1, 0, 1}}), {{0, 1, 1}})));
  Frf h = qt_frf(qt({{1, 0, 0}}), {{1, 1, 1}});
  Frf expected = qt_frf(qt({{2, 0, 0}, {-1, 0, 1}, {-1, 1, 1}}),
                        {{0, 1, 1}, {1, 1, 1}});
  CHECK(rf_equal(rf_add(f, h), expected));
}

TEST_CASE("rf_equal examples") {
  Frf a = Frf(tpoly({{1, 0}, {1, 1}}), {{Exponent{2}, 1}});
  Frf b = Frf(tpoly({{1, 0}}), {{Exponent{1}, 1}});
  CHECK(rf_equal(a, b));
  Frf c = qt_frf(qt({{1, 0, 0}}), {{0, 1, 1}});
  Frf d = qt_frf(qt({{1, 0, 0}}), {{1, 1, 1}});
  CHECK_FALSE(rf_equal(c, d));
  Frf z = zeta_d2_shape();
  Frf z2 = Frf(z.numerator().times_binomial({0, 2}), [&] {
    auto den = z.denominator();
    den[Exponent{0, 2}] += 1;
    return den;
  }());
  CHECK(rf_equal(z, z2));
}

TEST_CASE("rf_normalize examples") {
  Frf f = qt_frf(qt({{1, 0, 0}, {-1, 0, 2}}), {{0, 1, 1}, {1, 1, 1}});
  Frf n = rf_normalize(f);
  CHECK(n.numerator() == qt({{1, 0, 0}, {1, 0, 1}}));
  CHECK(n.denominator() == Frf::Denominator{{Exponent{1, 1}, 1}});
  Frf reduced = qt_frf(qt({{1, 0, 0}}), {{1, 1, 1}});
  Frf again = rf_normalize(reduced);
  CHECK(again.numerator() == reduced.numerator());
  CHECK(again.denominator() == reduced.denominator());
  Frf zero = Frf(P(qt_arena()), {{Exponent{0, 1}, 2}});
  CHECK(zero.is_zero());
  CHECK(rf_normalize(zero).denominator().empty());
}

TEST_CASE("rf_normalize is idempotent and rf_add commutes") {
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    Frf f = random_qt_frf(rng);
    Frf g = random_qt_frf(rng);
    Frf n1 = rf_normalize(f);
    Frf n2 = rf_normalize(n1);
    CHECK(n1.numerator() == n2.numerator());
    CHECK(n1.denominator() == n2.denominator());
    CHECK(rf_equal(n1, f));
    CHECK(rf_equal(rf_add(f, g), rf_add(g, f)));
  }
}

TEST_CASE("rf_substitute examples") {
  ArenaPtr x = make_arena({"X_1"});
  Frf f(P::constant(x, 1), {{Exponent{1}, 1}});
  Frf img = rf_substitute(f, {Exponent{2, 1}}, qt_arena());
  CHECK(rf_equal(img, qt_frf(qt({{1, 0, 0}}), {{2, 1, 1}})));
  Frf g = zeta_d2_shape();
  Frf same = rf_substitute(g, {Exponent{1, 0}, Exponent{0, 1}}, qt_arena());
  CHECK(rf_equal(same, g));
  ArenaPtr z = z_arena(1);
  Frf h(P::constant(z, 1), {{Exponent{1}, 1}});
  CHECK_THROWS_AS(rf_substitute(h, {Exponent{0}}, t_arena()),
                  SingularSubstitution);
}

TEST_CASE("rf_substitute is multiplicative") {
  std::mt19937 rng(5);
  const std::vector<Exponent> images{{2, 1}, {1, 3}};
  for (int i = 0; i < 40; ++i) {
    Frf f = random_qt_frf(rng);
    Frf g = random_qt_frf(rng);
    Frf lhs = rf_substitute(rf_mul(f, g), images, qt_arena());
    Frf rhs = rf_mul(rf_substitute(f, images, qt_arena()),
                     rf_substitute(g, images, qt_arena()));
    CHECK(rf_equal(lhs, rhs));
  }
}

TEST_CASE("rf_series_coeffs examples") {
  auto a = rf_series_coeffs(zeta_d2_shape(), 2, 1);
  CHECK(a == std::vector<Rational>{1, 3});
  auto b = rf_series_coeffs(zeta_d2_shape(), 3, 1);
  CHECK(b == std::vector<Rational>{1, 4});
  Frf geo = qt_frf(qt({{1, 0, 0}}), {{0, 1, 1}});
  CHECK(rf_series_coeffs(geo, 5, 3) == std::vector<Rational>{1, 1, 1, 1});
  Frf pole = qt_frf(qt({{1, 0, 0}}), {{1, 0, 1}});
  CHECK_THROWS_AS(rf_series_coeffs(pole, 1, 2), PoleError);
}

TEST_CASE("rf_series_coeffs of a product is the convolution") {
  std::mt19937 rng(9);
  for (int i = 0; i < 40; ++i) {
    Frf f = random_qt_frf(rng);
    Frf g = random_qt_frf(rng);
    auto sf = rf_series_coeffs(f, 2, 6);
    auto sg = rf_series_coeffs(g, 2, 6);
    CHECK(rf_series_coeffs(rf_mul(f, g), 2, 6) == convolve(sf, sg));
  }
}

TEST_CASE("rf_invert_variables is an involution") {
  std::mt19937 rng(13);
  for (int i = 0; i < 40; ++i) {
    Frf f = random_qt_frf(rng);
    CHECK(rf_equal(rf_invert_variables(rf_invert_variables(f)), f));
  }
  // 1/(1 - t) at t^-1 equals -t/(1 - t).
  Frf geo = qt_frf(qt({{1, 0, 0}}), {{0, 1, 1}});
  CHECK(rf_equal(rf_invert_variables(geo), qt_frf(qt({{-1, 0, 1}}), {{0, 1, 1}})));
}

TEST_CASE("frf JSON round trip") {
  std::mt19937 rng(17);
  for (int i = 0; i < 30; ++i) {
    Frf f = random_qt_frf(rng);
    Frf g = frf_from_json(frf_to_json(f));
    CHECK(g.numerator() == f.numerator());
    CHECK(g.denominator() == f.denominator());
    CHECK(frf_to_json(g) == frf_to_json(f));
  }
  auto j = frf_to_json(zeta_d2_shape());
  CHECK(j["vars"] == nlohmann::json::array({"q", "t"}));
  CHECK(j["num"][0][0].is_string());
}

TEST_CASE("linear factored functions") {
  // 3 / (2 (2s - 3)(s - 1) s)
  Lff f = Lff::from_factors(Rational(3, 2), {{3, 2}, {1, 1}, {0, 1}});
  CHECK(f.degree() == -3);
  CHECK(f.evaluate(2) == Rational(3, 2) / (Rational(1) * 1 * 2));
  Lff g = Lff::from_factors(Rational(3), {{6, 4}, {1, 1}, {0, 1}});
  CHECK(lf_equal(f, g));
  Lff h = lf_add(f, f);
  CHECK(h.evaluate(5) == 2 * f.evaluate(5));
  Lff k = lf_sum({f, g, Lff::from_factors(-3, {{3, 2}, {1, 1}, {0, 1}})});
  CHECK(k.evaluate(7) == 0);
  Lff r = lff_from_json(lff_to_json(f));
  CHECK(lf_equal(r, f));
  CHECK(r.denominator() == f.denominator());
}

TEST_CASE("rf_sum matches iterated rf_add") {
  std::mt19937 rng(21);
  std::vector<Frf> terms;
  Frf acc(qt_arena());
  for (int i = 0; i < 25; ++i) {
    terms.push_back(random_qt_frf(rng));
    acc = rf_add(acc, terms.back());
  }
  CHECK(rf_equal(rf_sum(terms), acc));
}
