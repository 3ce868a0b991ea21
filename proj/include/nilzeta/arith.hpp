// Exact Laurent polynomials and rational functions whose denominators are
// products of binomials (1 - Z^e).

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilzeta {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::vector<int>;

// Operand arenas differ, or a value has the wrong shape for an operation.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A denominator factor was mapped to (1 - 1).
struct SingularSubstitution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Series expansion hit a factor (1 - c) with c = 1.
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An ordered list of variable names. Values built over different arenas
// cannot be combined.
class Arena {
 public:
  explicit Arena(std::vector<std::string> names) : names_(std::move(names)) {}

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;

  bool operator==(const Arena& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using ArenaPtr = std::shared_ptr<const Arena>;

ArenaPtr make_arena(std::vector<std::string> names);
ArenaPtr q_arena();
ArenaPtr qt_arena();
ArenaPtr t_arena();
ArenaPtr s_arena();
// Variables X_1..X_d, Y_1..Y_{d'}, then Z_1..Z_r.
ArenaPtr xyz_arena(int d, int dprime, int slack);
// Variables Z_1..Z_m.
ArenaPtr z_arena(int m);

void require_same_arena(const ArenaPtr& a, const ArenaPtr& b);

class LaurentPolynomial {
 public:
  using Term = std::pair<Exponent, Rational>;

  explicit LaurentPolynomial(ArenaPtr arena);
  // Terms may be unsorted and contain duplicates or zeros.
  LaurentPolynomial(ArenaPtr arena, std::vector<Term> terms);

  static LaurentPolynomial constant(ArenaPtr arena, const Rational& c);
  static LaurentPolynomial monomial(ArenaPtr arena, Exponent e,
                                    const Rational& c = 1);

  const ArenaPtr& arena() const { return arena_; }
  // Sorted by exponent, lexicographically ascending; no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;

  // Componentwise minimum / maximum exponent over all terms.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;
  LaurentPolynomial scaled(const Rational& c) const;
  LaurentPolynomial shifted(const Exponent& e) const;
  // this * (1 - Z^e)^k, computed by repeated merging.
  LaurentPolynomial times_binomial(const Exponent& e, int k = 1) const;
  // this / (1 - Z^e) when exact, otherwise nullopt. Requires e >= 0, e != 0.
  std::optional<LaurentPolynomial> divide_binomial(const Exponent& e) const;

  bool operator==(const LaurentPolynomial& other) const;
  bool operator!=(const LaurentPolynomial& other) const {
    return !(*this == other);
  }

  std::string to_string() const;

 private:
  void canonicalize();

  ArenaPtr arena_;
  std::vector<Term> terms_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b);

LaurentPolynomial poly_mul(const LaurentPolynomial& a,
                           const LaurentPolynomial& b);
// Returns q with a = q * b, or nullopt when b does not divide a.
// Throws DomainError when b is zero.
std::optional<LaurentPolynomial> poly_exact_div(const LaurentPolynomial& a,
                                                const LaurentPolynomial& b);

// Numerator over a multiset of factors (1 - Z^e), e >= 0 and e != 0.
class FactoredRationalFunction {
 public:
  using Denominator = std::map<Exponent, int>;

  explicit FactoredRationalFunction(ArenaPtr arena);
  explicit FactoredRationalFunction(LaurentPolynomial numerator);
  FactoredRationalFunction(LaurentPolynomial numerator, Denominator den);

  const ArenaPtr& arena() const { return num_.arena(); }
  const LaurentPolynomial& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Total number of binomial factors counted with multiplicity.
  int denominator_degree() const;
  // Product of all denominator factors, expanded.
  LaurentPolynomial expanded_denominator() const;

  std::string to_string() const;

 private:
  LaurentPolynomial num_;
  Denominator den_;
};

using Frf = FactoredRationalFunction;

Frf rf_add(const Frf& a, const Frf& b);
Frf rf_mul(const Frf& a, const Frf& b);
Frf rf_scale(const Frf& f, const LaurentPolynomial& c);
bool rf_equal(const Frf& a, const Frf& b);
// Cancels denominator factors that divide the numerator, then reduces each
// remaining (1 - m^k) to (1 - m^j) for the smallest j | k whose cofactor
// divides the numerator.
Frf rf_normalize(const Frf& f);
// Cancellation of whole factors only; cheaper than rf_normalize.
Frf rf_cancel(const Frf& f);

// Each source variable maps to a coefficient-one monomial in the target
// arena. A denominator factor landing on a negative monomial is rewritten
// as -m^-1 / (1 - m^-1); mixed-sign images are a StructuralError.
Frf rf_substitute(const Frf& f, const std::vector<Exponent>& images,
                  const ArenaPtr& target);
LaurentPolynomial poly_substitute(const LaurentPolynomial& p,
                                  const std::vector<Exponent>& images,
                                  const ArenaPtr& target);

// Z -> Z^{-1} in every variable.
Frf rf_invert_variables(const Frf& f);

// Power-series coefficients of t^0..t^order after setting q = q_value.
std::vector<Rational> rf_series_coeffs(const Frf& f, long q_value, int order);

// Univariate polynomial in one variable with rational coefficients.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs);
  static UnivariatePolynomial constant(const Rational& c);
  // b*s - a
  static UnivariatePolynomial linear(const Rational& b, const Rational& a);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational leading() const;
  Rational operator()(const Rational& x) const;
  Rational coefficient(int k) const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& other);
  UnivariatePolynomial operator*(const UnivariatePolynomial& other) const;
  UnivariatePolynomial scaled(const Rational& c) const;
  // Division by (s - root); nullopt when root is not a root.
  std::optional<UnivariatePolynomial> divide_root(const Rational& root) const;
  bool operator==(const UnivariatePolynomial& other) const {
    return coeffs_ == other.coeffs_;
  }

  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Numerator in s over a product of linear factors (b*s - a), stored with
// b > 0 and gcd(a, b) = 1.
class LinearFactoredFunction {
 public:
  using Factor = std::pair<long, long>;  // (a, b)
  using Denominator = std::map<Factor, int>;

  LinearFactoredFunction() = default;
  LinearFactoredFunction(UnivariatePolynomial num, Denominator den);
  // c / prod (b_i s - a_i); factors may be non-primitive.
  static LinearFactoredFunction from_factors(const Rational& c,
                                             const std::vector<Factor>& f);

  const UnivariatePolynomial& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int denominator_degree() const;
  // deg(numerator) - deg(denominator); meaningless for zero.
  int degree() const;
  UnivariatePolynomial expanded_denominator() const;
  Rational evaluate(const Rational& s) const;

  std::string to_string() const;

 private:
  UnivariatePolynomial num_;
  Denominator den_;
};

using Lff = LinearFactoredFunction;

Lff lf_add(const Lff& a, const Lff& b);
Lff lf_normalize(const Lff& f);
bool lf_equal(const Lff& a, const Lff& b);

// Sums many values by pairwise reduction; the result does not depend on how
// the inputs were produced, only on their order.
Frf rf_sum(std::vector<Frf> terms);
Lff lf_sum(std::vector<Lff> terms);

}  // namespace nilzeta
