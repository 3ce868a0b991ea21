#include "nilzeta/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nilzeta {

namespace {

bool lex_less(const Exponent& a, const Exponent& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent sub_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero_exp(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool is_nonneg_exp(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x >= 0; });
}

bool is_nonpos_exp(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x <= 0; });
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Rational int_power(long base, int exp) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(std::labs(base)),
                static_cast<unsigned long>(std::abs(exp)));
  if (base < 0 && (std::abs(exp) % 2 == 1)) p = -p;
  if (exp >= 0) return Rational(p);
  return Rational(Integer(1), p);
}

// Merge-adds two sorted term lists.
std::vector<LaurentPolynomial::Term> merge_terms(
    const std::vector<LaurentPolynomial::Term>& a,
    const std::vector<LaurentPolynomial::Term>& b, bool subtract) {
  std::vector<LaurentPolynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && lex_less(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || lex_less(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second)
                                            : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second)
                            : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

std::string format_monomial(const Arena& arena, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += arena.names()[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int j = 1; j <= n; ++j) {
    if (n % j == 0) out.push_back(j);
  }
  return out;
}

}  // namespace

int Arena::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return -1;
  return static_cast<int>(it - names_.begin());
}

ArenaPtr make_arena(std::vector<std::string> names) {
  return std::make_shared<const Arena>(std::move(names));
}

ArenaPtr q_arena() {
  static const ArenaPtr arena = make_arena({"q"});
  return arena;
}

ArenaPtr qt_arena() {
  static const ArenaPtr arena = make_arena({"q", "t"});
  return arena;
}

ArenaPtr t_arena() {
  static const ArenaPtr arena = make_arena({"t"});
  return arena;
}

ArenaPtr s_arena() {
  static const ArenaPtr arena = make_arena({"s"});
  return arena;
}

ArenaPtr xyz_arena(int d, int dprime, int slack) {
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back("X" + std::to_string(i));
  for (int j = 1; j <= dprime; ++j) names.push_back("Y" + std::to_string(j));
  for (int k = 1; k <= slack; ++k) names.push_back("Z" + std::to_string(k));
  return make_arena(std::move(names));
}

ArenaPtr z_arena(int m) {
  std::vector<std::string> names;
  for (int k = 1; k <= m; ++k) names.push_back("Z" + std::to_string(k));
  return make_arena(std::move(names));
}

void require_same_arena(const ArenaPtr& a, const ArenaPtr& b) {
  if (a != b && !(*a == *b)) {
    throw StructuralError("arena mismatch");
  }
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(ArenaPtr arena)
    : arena_(std::move(arena)) {}

LaurentPolynomial::LaurentPolynomial(ArenaPtr arena, std::vector<Term> terms)
    : arena_(std::move(arena)), terms_(std::move(terms)) {
  canonicalize();
}

void LaurentPolynomial::canonicalize() {
  for (const auto& t : terms_) {
    if (t.first.size() != arena_->size()) {
      throw StructuralError("exponent length does not match arena");
    }
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return lex_less(a.first, b.first);
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.second == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

LaurentPolynomial LaurentPolynomial::constant(ArenaPtr arena,
                                              const Rational& c) {
  Exponent zero(arena->size(), 0);
  return monomial(std::move(arena), std::move(zero), c);
}

LaurentPolynomial LaurentPolynomial::monomial(ArenaPtr arena, Exponent e,
                                              const Rational& c) {
  std::vector<Term> terms;
  terms.emplace_back(std::move(e), c);
  return LaurentPolynomial(std::move(arena), std::move(terms));
}

Rational LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, const Exponent& x) { return lex_less(t.first, x); });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

Exponent LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) return Exponent(arena_->size(), 0);
  Exponent r = terms_.front().first;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], t.first[i]);
  }
  return r;
}

Exponent LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) return Exponent(arena_->size(), 0);
  Exponent r = terms_.front().first;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], t.first[i]);
  }
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(
    const LaurentPolynomial& other) {
  require_same_arena(arena_, other.arena_);
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(
    const LaurentPolynomial& other) {
  require_same_arena(arena_, other.arena_);
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  return scaled(-1);
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c) const {
  LaurentPolynomial r(arena_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& e) const {
  if (e.size() != arena_->size()) {
    throw StructuralError("shift length does not match arena");
  }
  LaurentPolynomial r(arena_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.first = add_exp(t.first, e);
  return r;
}

LaurentPolynomial LaurentPolynomial::times_binomial(const Exponent& e,
                                                    int k) const {
  LaurentPolynomial r = *this;
  for (int i = 0; i < k; ++i) r -= r.shifted(e);
  return r;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_binomial(
    const Exponent& e) const {
  if (e.size() != arena_->size() || is_zero_exp(e) || !is_nonneg_exp(e)) {
    throw DomainError("binomial exponent must be nonnegative and nonzero");
  }
  std::size_t p = 0;
  while (e[p] == 0) ++p;
  // Terms lying on a common line x0 + k*e, keyed by the base point x0.
  std::map<Exponent, std::vector<std::pair<long, const Rational*>>> lines;
  for (const auto& t : terms_) {
    long k = floor_div(t.first[p], e[p]);
    Exponent base(t.first.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      base[i] = t.first[i] - static_cast<int>(k) * e[i];
    }
    lines[base].emplace_back(k, &t.second);
  }
  std::vector<Term> out;
  for (auto& [base, pts] : lines) {
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational running = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      running += *pts[i].second;
      long next = (i + 1 < pts.size()) ? pts[i + 1].first : pts[i].first + 1;
      if (running == 0) continue;
      if (i + 1 == pts.size()) return std::nullopt;
      for (long k = pts[i].first; k < next; ++k) {
        Exponent x(base.size());
        for (std::size_t j = 0; j < x.size(); ++j) {
          x[j] = base[j] + static_cast<int>(k) * e[j];
        }
        out.emplace_back(std::move(x), running);
      }
    }
  }
  return LaurentPolynomial(arena_, std::move(out));
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& other) const {
  require_same_arena(arena_, other.arena_);
  return terms_ == other.terms_;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    std::string mono = format_monomial(*arena_, it->first);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (mono.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << mono;
    }
    first = false;
  }
  return os.str();
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
  a += b;
  return a;
}

LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
  a -= b;
  return a;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  return poly_mul(a, b);
}

LaurentPolynomial poly_mul(const LaurentPolynomial& a,
                           const LaurentPolynomial& b) {
  require_same_arena(a.arena(), b.arena());
  if (a.is_zero() || b.is_zero()) return LaurentPolynomial(a.arena());
  const LaurentPolynomial& small = a.size() <= b.size() ? a : b;
  const LaurentPolynomial& big = a.size() <= b.size() ? b : a;
  if (small.size() <= 8) {
    LaurentPolynomial r(a.arena());
    for (const auto& [e, c] : small.terms()) r += big.shifted(e).scaled(c);
    return r;
  }
  std::map<Exponent, Rational, bool (*)(const Exponent&, const Exponent&)>
      acc(lex_less);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      acc[add_exp(ea, eb)] += ca * cb;
    }
  }
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) terms.emplace_back(e, std::move(c));
  }
  return LaurentPolynomial(a.arena(), std::move(terms));
}

std::optional<LaurentPolynomial> poly_exact_div(const LaurentPolynomial& a,
                                                const LaurentPolynomial& b) {
  require_same_arena(a.arena(), b.arena());
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return LaurentPolynomial(a.arena());
  if (b.size() == 1) {
    const auto& [eb, cb] = b.terms().front();
    Exponent neg(eb.size());
    for (std::size_t i = 0; i < eb.size(); ++i) neg[i] = -eb[i];
    return a.shifted(neg).scaled(1 / cb);
  }
  // If a = Q*b then the Newton polytope of a is the Minkowski sum of those of
  // Q and b, which bounds every exponent Q can have.
  Exponent lo = sub_exp(a.min_exponent(), b.min_exponent());
  Exponent hi = sub_exp(a.max_exponent(), b.max_exponent());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return std::nullopt;
  }
  const auto& [lead_e, lead_c] = b.terms().back();
  std::map<Exponent, Rational, bool (*)(const Exponent&, const Exponent&)>
      rem(lex_less);
  for (const auto& [e, c] : a.terms()) rem.emplace(e, c);
  std::vector<LaurentPolynomial::Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    Exponent qe = sub_exp(top->first, lead_e);
    for (std::size_t i = 0; i < qe.size(); ++i) {
      if (qe[i] < lo[i] || qe[i] > hi[i]) return std::nullopt;
    }
    Rational qc = top->second / lead_c;
    for (const auto& [eb, cb] : b.terms()) {
      Exponent x = add_exp(qe, eb);
      auto it = rem.find(x);
      if (it == rem.end()) {
        rem.emplace(std::move(x), -qc * cb);
      } else {
        it->second -= qc * cb;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.emplace_back(std::move(qe), std::move(qc));
  }
  return LaurentPolynomial(a.arena(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// FactoredRationalFunction

FactoredRationalFunction::FactoredRationalFunction(ArenaPtr arena)
    : num_(std::move(arena)) {}

FactoredRationalFunction::FactoredRationalFunction(LaurentPolynomial numerator)
    : num_(std::move(numerator)) {}

FactoredRationalFunction::FactoredRationalFunction(LaurentPolynomial numerator,
                                                   Denominator den)
    : num_(std::move(numerator)), den_(std::move(den)) {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->first.size() != num_.arena()->size()) {
      throw StructuralError("denominator exponent does not match arena");
    }
    if (is_zero_exp(it->first) || !is_nonneg_exp(it->first)) {
      throw DomainError("denominator factor must be (1 - Z^e), e >= 0, e != 0");
    }
    if (it->second < 0) throw DomainError("negative factor multiplicity");
    if (it->second == 0) {
      it = den_.erase(it);
    } else {
      ++it;
    }
  }
  if (num_.is_zero()) den_.clear();
}

int FactoredRationalFunction::denominator_degree() const {
  int total = 0;
  for (const auto& [e, k] : den_) total += k;
  return total;
}

LaurentPolynomial FactoredRationalFunction::expanded_denominator() const {
  LaurentPolynomial r = LaurentPolynomial::constant(arena(), 1);
  for (const auto& [e, k] : den_) r = r.times_binomial(e, k);
  return r;
}

std::string FactoredRationalFunction::to_string() const {
  std::string out = "(" + num_.to_string() + ")";
  if (den_.empty()) return out;
  out += " / (";
  bool first = true;
  for (const auto& [e, k] : den_) {
    if (!first) out += "*";
    out += "(1 - " + format_monomial(*arena(), e) + ")";
    if (k != 1) out += "^" + std::to_string(k);
    first = false;
  }
  return out + ")";
}

Frf rf_cancel(const Frf& f) {
  if (f.is_zero()) return Frf(f.arena());
  LaurentPolynomial num = f.numerator();
  Frf::Denominator den;
  for (const auto& [e, k] : f.denominator()) {
    int left = k;
    while (left > 0) {
      auto q = num.divide_binomial(e);
      if (!q) break;
      num = std::move(*q);
      --left;
    }
    if (left > 0) den[e] = left;
  }
  return Frf(std::move(num), std::move(den));
}

Frf rf_normalize(const Frf& f) {
  Frf cur = rf_cancel(f);
  bool changed = true;
  while (changed && !cur.is_zero()) {
    changed = false;
    for (const auto& [e, k] : cur.denominator()) {
      int g = 0;
      for (int x : e) g = std::gcd(g, x);
      if (g <= 1) continue;
      Exponent base(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) base[i] = e[i] / g;
      for (int j : divisors(g)) {
        if (j == g) break;
        // (1 - m^g) / (1 - m^j) = 1 + m^j + ... + m^(g-j)
        std::vector<LaurentPolynomial::Term> terms;
        for (int l = 0; l < g; l += j) {
          Exponent x(e.size());
          for (std::size_t i = 0; i < e.size(); ++i) x[i] = base[i] * l;
          terms.emplace_back(std::move(x), 1);
        }
        LaurentPolynomial cof(cur.arena(), std::move(terms));
        auto q = poly_exact_div(cur.numerator(), cof);
        if (!q) continue;
        Frf::Denominator den = cur.denominator();
        if (--den[e] == 0) den.erase(e);
        Exponent smaller(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) smaller[i] = base[i] * j;
        den[smaller] += 1;
        cur = rf_cancel(Frf(std::move(*q), std::move(den)));
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return cur;
}

Frf rf_add(const Frf& a, const Frf& b) {
  require_same_arena(a.arena(), b.arena());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Frf::Denominator common = a.denominator();
  for (const auto& [e, k] : b.denominator()) {
    int& c = common[e];
    c = std::max(c, k);
  }
  LaurentPolynomial na = a.numerator();
  LaurentPolynomial nb = b.numerator();
  for (const auto& [e, k] : common) {
    auto ia = a.denominator().find(e);
    int ka = ia == a.denominator().end() ? 0 : ia->second;
    auto ib = b.denominator().find(e);
    int kb = ib == b.denominator().end() ? 0 : ib->second;
    if (k > ka) na = na.times_binomial(e, k - ka);
    if (k > kb) nb = nb.times_binomial(e, k - kb);
  }
  return rf_cancel(Frf(na + nb, std::move(common)));
}

Frf rf_mul(const Frf& a, const Frf& b) {
  require_same_arena(a.arena(), b.arena());
  Frf::Denominator den = a.denominator();
  for (const auto& [e, k] : b.denominator()) den[e] += k;
  return rf_cancel(Frf(poly_mul(a.numerator(), b.numerator()), std::move(den)));
}

Frf rf_scale(const Frf& f, const LaurentPolynomial& c) {
  return rf_cancel(Frf(poly_mul(f.numerator(), c), f.denominator()));
}

bool rf_equal(const Frf& a, const Frf& b) {
  require_same_arena(a.arena(), b.arena());
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  LaurentPolynomial lhs = a.numerator();
  LaurentPolynomial rhs = b.numerator();
  std::map<Exponent, int> all;
  for (const auto& [e, k] : a.denominator()) all[e] += k;
  for (const auto& [e, k] : b.denominator()) all[e] -= k;
  for (const auto& [e, diff] : all) {
    if (diff < 0) lhs = lhs.times_binomial(e, -diff);
    if (diff > 0) rhs = rhs.times_binomial(e, diff);
  }
  return lhs == rhs;
}

LaurentPolynomial poly_substitute(const LaurentPolynomial& p,
                                  const std::vector<Exponent>& images,
                                  const ArenaPtr& target) {
  if (images.size() != p.arena()->size()) {
    throw StructuralError("substitution needs one image per variable");
  }
  for (const auto& img : images) {
    if (img.size() != target->size()) {
      throw StructuralError("image length does not match target arena");
    }
  }
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    Exponent x(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += e[i] * images[i][j];
    }
    terms.emplace_back(std::move(x), c);
  }
  return LaurentPolynomial(target, std::move(terms));
}

Frf rf_substitute(const Frf& f, const std::vector<Exponent>& images,
                  const ArenaPtr& target) {
  LaurentPolynomial num = poly_substitute(f.numerator(), images, target);
  Frf::Denominator den;
  for (const auto& [e, k] : f.denominator()) {
    Exponent x(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += e[i] * images[i][j];
    }
    if (is_zero_exp(x)) {
      throw SingularSubstitution("denominator factor maps to (1 - 1)");
    }
    if (is_nonneg_exp(x)) {
      den[x] += k;
    } else if (is_nonpos_exp(x)) {
      // 1/(1 - m) = -m^{-1} / (1 - m^{-1})
      Exponent neg(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) neg[j] = -x[j];
      den[neg] += k;
      for (int i = 0; i < k; ++i) num = num.shifted(x).scaled(-1);
    } else {
      throw StructuralError("denominator factor maps to a mixed-sign monomial");
    }
  }
  return rf_normalize(Frf(std::move(num), std::move(den)));
}

Frf rf_invert_variables(const Frf& f) {
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& [e, c] : f.numerator().terms()) {
    Exponent x(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) x[i] = -e[i];
    terms.emplace_back(std::move(x), c);
  }
  LaurentPolynomial num(f.arena(), std::move(terms));
  // 1/(1 - Z^-e) = -Z^e / (1 - Z^e)
  for (const auto& [e, k] : f.denominator()) {
    for (int i = 0; i < k; ++i) num = num.shifted(e).scaled(-1);
  }
  return Frf(std::move(num), f.denominator());
}

std::vector<Rational> rf_series_coeffs(const Frf& f, long q_value, int order) {
  const Arena& arena = *f.arena();
  if (arena.size() != 2 || arena.names()[0] != "q" || arena.names()[1] != "t") {
    throw StructuralError("series expansion needs the (q, t) arena");
  }
  if (order < 0) throw DomainError("negative series order");
  std::vector<Rational> series(order + 1, Rational(0));
  for (const auto& [e, c] : f.numerator().terms()) {
    if (e[1] < 0) throw StructuralError("numerator has negative t-exponent");
    if (e[1] > order) continue;
    series[e[1]] += c * int_power(q_value, e[0]);
  }
  for (const auto& [e, k] : f.denominator()) {
    Rational c = int_power(q_value, e[0]);
    if (e[1] == 0) {
      if (c == 1) throw PoleError("factor (1 - q^a) vanishes at this q");
      Rational inv = 1 / (1 - c);
      for (int i = 0; i < k; ++i) {
        for (auto& x : series) x *= inv;
      }
      continue;
    }
    for (int i = 0; i < k; ++i) {
      for (int n = e[1]; n <= order; ++n) series[n] += c * series[n - e[1]];
    }
  }
  return series;
}

Frf rf_sum(std::vector<Frf> terms) {
  if (terms.empty()) throw StructuralError("rf_sum needs at least one term");
  ArenaPtr arena = terms.front().arena();
  // Terms sharing a denominator are added numerator-wise first.
  std::map<Frf::Denominator, LaurentPolynomial> buckets;
  for (auto& t : terms) {
    require_same_arena(arena, t.arena());
    if (t.is_zero()) continue;
    auto it = buckets.find(t.denominator());
    if (it == buckets.end()) {
      buckets.emplace(t.denominator(), t.numerator());
    } else {
      it->second += t.numerator();
    }
  }
  std::vector<Frf> level;
  for (auto& [den, num] : buckets) level.push_back(rf_cancel(Frf(num, den)));
  if (level.empty()) return Frf(arena);
  while (level.size() > 1) {
    std::vector<Frf> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(rf_add(level[i], level[i + 1]));
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) {
  return UnivariatePolynomial(std::vector<Rational>{c});
}

UnivariatePolynomial UnivariatePolynomial::linear(const Rational& b,
                                                  const Rational& a) {
  return UnivariatePolynomial(std::vector<Rational>{-a, b});
}

Rational UnivariatePolynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UnivariatePolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Rational UnivariatePolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(
    const UnivariatePolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

UnivariatePolynomial UnivariatePolynomial::operator*(
    const UnivariatePolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return UnivariatePolynomial(std::move(out));
}

std::optional<UnivariatePolynomial> UnivariatePolynomial::divide_root(
    const Rational& root) const {
  if (is_zero()) return UnivariatePolynomial();
  std::vector<Rational> out(coeffs_.size() - 1, Rational(0));
  Rational carry = 0;
  for (int k = degree(); k >= 1; --k) {
    carry = coeffs_[k] + carry * root;
    out[k - 1] = carry;
  }
  if (coeffs_[0] + carry * root != 0) return std::nullopt;
  return UnivariatePolynomial(std::move(out));
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// LinearFactoredFunction

LinearFactoredFunction::LinearFactoredFunction(UnivariatePolynomial num,
                                               Denominator den)
    : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& [f, k] : den_) {
    if (f.second <= 0 || std::gcd(std::labs(f.first), f.second) != 1) {
      throw DomainError("linear factor must be primitive with b > 0");
    }
    if (k <= 0) throw DomainError("nonpositive factor multiplicity");
  }
  if (num_.is_zero()) den_.clear();
}

LinearFactoredFunction LinearFactoredFunction::from_factors(
    const Rational& c, const std::vector<Factor>& factors) {
  Rational scale = c;
  Denominator den;
  for (auto [a, b] : factors) {
    if (b == 0) {
      if (a == 0) throw DomainError("zero linear factor");
      scale /= Rational(-a);
      continue;
    }
    if (b < 0) {
      a = -a;
      b = -b;
      scale = -scale;
    }
    long g = std::gcd(std::labs(a), b);
    scale /= Rational(g);
    den[{a / g, b / g}] += 1;
  }
  return LinearFactoredFunction(UnivariatePolynomial::constant(scale),
                                std::move(den));
}

int LinearFactoredFunction::denominator_degree() const {
  int total = 0;
  for (const auto& [f, k] : den_) total += k;
  return total;
}

int LinearFactoredFunction::degree() const {
  return num_.degree() - denominator_degree();
}

UnivariatePolynomial LinearFactoredFunction::expanded_denominator() const {
  UnivariatePolynomial r = UnivariatePolynomial::constant(1);
  for (const auto& [f, k] : den_) {
    for (int i = 0; i < k; ++i) {
      r = r * UnivariatePolynomial::linear(f.second, f.first);
    }
  }
  return r;
}

Rational LinearFactoredFunction::evaluate(const Rational& s) const {
  Rational den = 1;
  for (const auto& [f, k] : den_) {
    Rational v = Rational(f.second) * s - Rational(f.first);
    if (v == 0) throw PoleError("evaluation at a pole");
    for (int i = 0; i < k; ++i) den *= v;
  }
  return num_(s) / den;
}

std::string LinearFactoredFunction::to_string() const {
  std::string out = "(" + num_.to_string() + ")";
  if (den_.empty()) return out;
  out += " / (";
  bool first = true;
  for (auto it = den_.rbegin(); it != den_.rend(); ++it) {
    const auto& [f, k] = *it;
    if (!first) out += "*";
    std::string lin = UnivariatePolynomial::linear(f.second, f.first).to_string();
    out += "(" + lin + ")";
    if (k != 1) out += "^" + std::to_string(k);
    first = false;
  }
  return out + ")";
}

Lff lf_normalize(const Lff& f) {
  if (f.is_zero()) return Lff();
  UnivariatePolynomial num = f.numerator();
  Lff::Denominator den;
  for (const auto& [fac, k] : f.denominator()) {
    Rational root(fac.first, fac.second);
    root.canonicalize();
    int left = k;
    while (left > 0) {
      auto q = num.divide_root(root);
      if (!q) break;
      num = q->scaled(Rational(1, fac.second));
      --left;
    }
    if (left > 0) den[fac] = left;
  }
  return Lff(std::move(num), std::move(den));
}

Lff lf_add(const Lff& a, const Lff& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Lff::Denominator common = a.denominator();
  for (const auto& [f, k] : b.denominator()) {
    int& c = common[f];
    c = std::max(c, k);
  }
  UnivariatePolynomial na = a.numerator();
  UnivariatePolynomial nb = b.numerator();
  for (const auto& [f, k] : common) {
    auto ia = a.denominator().find(f);
    int ka = ia == a.denominator().end() ? 0 : ia->second;
    auto ib = b.denominator().find(f);
    int kb = ib == b.denominator().end() ? 0 : ib->second;
    UnivariatePolynomial lin = UnivariatePolynomial::linear(f.second, f.first);
    for (int i = ka; i < k; ++i) na = na * lin;
    for (int i = kb; i < k; ++i) nb = nb * lin;
  }
  na += nb;
  return lf_normalize(Lff(std::move(na), std::move(common)));
}

bool lf_equal(const Lff& a, const Lff& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  UnivariatePolynomial lhs = a.numerator();
  UnivariatePolynomial rhs = b.numerator();
  std::map<Lff::Factor, int> all;
  for (const auto& [f, k] : a.denominator()) all[f] += k;
  for (const auto& [f, k] : b.denominator()) all[f] -= k;
  for (const auto& [f, diff] : all) {
    UnivariatePolynomial lin = UnivariatePolynomial::linear(f.second, f.first);
    for (int i = 0; i < -diff; ++i) lhs = lhs * lin;
    for (int i = 0; i < diff; ++i) rhs = rhs * lin;
  }
  return lhs == rhs;
}

Lff lf_sum(std::vector<Lff> terms) {
  std::map<Lff::Denominator, UnivariatePolynomial> buckets;
  for (auto& t : terms) {
    if (t.is_zero()) continue;
    buckets[t.denominator()] += t.numerator();
  }
  std::vector<Lff> level;
  for (auto& [den, num] : buckets) {
    if (num.is_zero()) continue;
    level.push_back(lf_normalize(Lff(num, den)));
  }
  if (level.empty()) return Lff();
  while (level.size() > 1) {
    std::vector<Lff> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(lf_add(level[i], level[i + 1]));
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

}  // namespace nilzeta
