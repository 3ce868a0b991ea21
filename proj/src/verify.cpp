#include "nilzeta/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "nilzeta/golden.hpp"
#include "nilzeta/oracle.hpp"

namespace nilzeta {

namespace {

using P = LaurentPolynomial;

Check make(const std::string& name, bool pass, const std::string& detail = "") {
  return {name, pass ? Check::Status::pass : Check::Status::fail, detail};
}

Check skip(const std::string& name, const std::string& why) {
  return {name, Check::Status::skip, why};
}

std::string tag(int d) { return "d=" + std::to_string(d) + " "; }

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Frf negate(const Frf& f) { return rf_scale(f, P::constant(f.arena(), -1)); }

bool contains(const Subset& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

bool includes(const Subset& big, const Subset& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Support range(int lo, int hi) {
  Support s;
  for (int i = lo; i <= hi; ++i) s.push_back(i);
  return s;
}

Support set_minus(const Support& a, const Support& b) {
  Support out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// Bounded enumeration.

// Calls visit on every x in N_0^n with sum_i weight_i x_i <= budget.
void for_each_bounded(int n, const std::vector<int>& weight, int budget,
                      const std::function<void(const IntVector&)>& visit) {
  IntVector x(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      visit(x);
      return;
    }
    for (long v = 0; v * weight[i] <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - static_cast<int>(v) * weight[i]);
    }
    x[i] = 0;
  };
  rec(0, budget);
}

// Membership in G_{I,sigma} from its defining inequalities.
bool in_G(const IntVector& rs, const Subset& I, const Permutation& sigma, int d) {
  const int dp = binom2(d);
  for (int i = 1; i < d; ++i) {
    if (contains(I, i) ? rs[i - 1] == 0 : rs[i - 1] != 0) return false;
  }
  for (int i = 1; i < 2 * dp; ++i) {
    auto a = corresponding_tuple(sigma[i - 1], d);
    auto b = corresponding_tuple(sigma[i], d);
    long val = 0;
    for (int k = 0; k < d + dp; ++k) val += (a[k] - b[k]) * rs[k];
    if (sigma[i - 1] < sigma[i] ? val <= 0 : val < 0) return false;
  }
  return true;
}

// Membership in H_{I,J} from its defining inequalities.
bool in_H(const IntVector& rs, const Subset& I, const Subset& J, int d) {
  const int dp = binom2(d);
  for (int i = 1; i < d; ++i) {
    if (contains(I, i) ? rs[i - 1] == 0 : rs[i - 1] != 0) return false;
  }
  for (int j = 1; j < dp; ++j) {
    if (contains(J, j) ? rs[d + j - 1] == 0 : rs[d + j - 1] != 0) return false;
  }
  long val = rs[d - 2] + 2 * rs[d - 1];
  for (int j = 0; j < dp; ++j) val -= rs[d + j];
  return val >= 0;
}

// Series in u after the first weight.size() variables go to u^weight and
// the remaining (slack) variables to 1.
std::vector<Rational> weighted_series(const Frf& f, const std::vector<int>& weight,
                                      int budget) {
  std::vector<Exponent> images;
  for (std::size_t k = 0; k < f.arena()->size(); ++k) {
    images.push_back(Exponent{0, k < weight.size() ? weight[k] : 0});
  }
  return rf_series_coeffs(rf_substitute(f, images, qt_arena()), 2, budget);
}

std::vector<Rational> count_by_weight(int n, const std::vector<int>& weight, int budget,
                                      const std::function<bool(const IntVector&)>& member) {
  std::vector<Rational> out(budget + 1, 0);
  for_each_bounded(n, weight, budget, [&](const IntVector& x) {
    if (!member(x)) return;
    int w = 0;
    for (int k = 0; k < n; ++k) w += weight[k] * static_cast<int>(x[k]);
    out[w] += 1;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Monoids for the reciprocity laws.

bool has_positive_point(const DiophantineMonoid& mon) {
  std::vector<LinearConstraint> cs;
  for (const auto& row : mon.phi()) {
    LinearConstraint c;
    for (long x : row) c.coeffs.emplace_back(x);
    c.rel = LinearConstraint::Rel::eq;
    cs.push_back(std::move(c));
  }
  for (int i = 0; i < mon.m(); ++i) {
    LinearConstraint c;
    c.coeffs.assign(mon.m(), Rational(0));
    c.coeffs[i] = 1;
    c.rhs = 1;
    cs.push_back(std::move(c));
  }
  return lp_feasible(mon.m(), cs);
}

DiophantineMonoid random_monoid(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> rows(1, 2);
  for (;;) {
    IntMatrix phi(rows(rng), IntVector(m));
    for (auto& row : phi) {
      for (auto& x : row) x = entry(rng);
    }
    if (matrix_rank(phi) == 0) continue;
    DiophantineMonoid mon(phi, m);
    if (has_positive_point(mon)) return mon;
  }
}

int face_dim(const RaySet& rays, const Support& C) {
  IntMatrix face;
  for (const auto& r : rays.rays) {
    auto s = support_of(r);
    if (includes(C, s)) face.push_back(r);
  }
  return face.empty() ? 0 : matrix_rank(face);
}

struct ReciprocityTally {
  long stanley = 0, stanley_bad = 0;
  long faces = 0, faces_bad = 0;
  long inversion = 0, inversion_bad = 0;
};

// Stanley reciprocity (when E has a positive point) and face reciprocity on
// minimal supports and unions of two of them.
void monoid_reciprocity(const DiophantineMonoid& mon, ReciprocityTally& t) {
  RaySet rays = extreme_rays(mon);
  const Support full = range(1, mon.m());
  if (has_positive_point(mon)) {
    Frf closed = genfun_region(decompose_region(mon, rays, {}, full));
    Frf open = genfun_region(decompose_region(mon, rays, full, full));
    if (face_dim(rays, full) % 2) closed = negate(closed);
    ++t.stanley;
    if (!rf_equal(rf_invert_variables(open), closed)) ++t.stanley_bad;
  }
  auto ms = minimal_supports(rays);
  std::set<Support> faces(ms.begin(), ms.end());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      Support u;
      std::set_union(ms[i].begin(), ms[i].end(), ms[j].begin(), ms[j].end(),
                     std::back_inserter(u));
      faces.insert(u);
    }
  }
  for (const auto& A : faces) {
    if (!is_face_support(mon, A)) continue;
    Frf f = genfun_region(decompose_region(mon, rays, {}, A));
    Frf fbar = genfun_region(decompose_region(mon, rays, A, A));
    if (face_dim(rays, A) % 2) f = negate(f);
    ++t.faces;
    if (!rf_equal(rf_invert_variables(fbar), f)) ++t.faces_bad;
  }
}

// Inversion of variables for I_{E,A,C} when A, C and C \ A are face supports.
void inversion(const DiophantineMonoid& mon, const Support& A, const Support& C,
               ReciprocityTally& t) {
  const Support rest = set_minus(C, A);
  if (!is_face_support(mon, A) || !is_face_support(mon, C) || !is_face_support(mon, rest)) {
    return;
  }
  RaySet rays = extreme_rays(mon);
  Frf lhs = rf_invert_variables(genfun_region(decompose_region(mon, rays, A, C)));
  Frf rhs = genfun_region(decompose_region(mon, rays, rest, C));
  if (face_dim(rays, C) % 2) rhs = negate(rhs);
  ++t.inversion;
  if (!rf_equal(lhs, rhs)) ++t.inversion_bad;
}

void tally_checks(const std::string& prefix, const ReciprocityTally& t,
                  std::vector<Check>& out) {
  auto one = [&](const std::string& name, long n, long bad) {
    if (n == 0) {
      out.push_back(skip(prefix + name, "no applicable instances"));
    } else {
      out.push_back(make(prefix + name, bad == 0,
                         str(n - bad) + "/" + str(n) + " instances hold"));
    }
  };
  one("Stanley reciprocity", t.stanley, t.stanley_bad);
  one("face reciprocity", t.faces, t.faces_bad);
  one("inversion of variables", t.inversion, t.inversion_bad);
}

}  // namespace

// ---------------------------------------------------------------------------

std::string check_line(const Check& c) {
  const char* s = c.status == Check::Status::pass ? "PASS"
                  : c.status == Check::Status::fail ? "FAIL"
                                                    : "SKIP";
  std::string line = std::string(s) + "  " + c.name;
  if (!c.detail.empty()) line += "  [" + c.detail + "]";
  return line;
}

bool all_ok(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

const ZetaResult& ZetaProvider::get(int d, ZetaKind kind, const std::string& word) {
  for (const auto& r : memo_) {
    if (r.d == d && r.kind == kind && r.word == word) return r;
  }
  std::optional<ZetaResult> hit;
  if (cache_) hit = cache_->load(d, kind, word);
  if (!hit) {
    switch (kind) {
      case ZetaKind::padic: hit = zeta_padic(d, opts_); break;
      case ZetaKind::overlap: hit = zeta_overlap(d, word, opts_); break;
      case ZetaKind::no_overlap:
        hit = zeta_no_overlap(d, NoOverlapRoute::via_H, opts_);
        break;
      case ZetaKind::reduced: hit = zeta_reduced(d, opts_); break;
      case ZetaKind::topological: hit = zeta_topological(d, opts_); break;
    }
    if (cache_) cache_->store(*hit);
  }
  memo_.push_back(std::move(*hit));
  return memo_.back();
}

const Rational& ZetaProvider::c(int d) {
  for (const auto& [k, v] : c_memo_) {
    if (k == d) return v;
  }
  c_memo_.emplace_back(d, c_constant(d, opts_));
  return c_memo_.back().second;
}

std::vector<Check> verify_golden(int d, ZetaProvider& z) {
  std::vector<Check> out;
  if (auto g = golden_rational(d, ZetaKind::padic)) {
    const Frf& f = z.get(d, ZetaKind::padic).rational();
    out.push_back(make(tag(d) + "p-adic closed form", rf_equal(f, *g)));
  } else if (d == 4) {
    const Frf& f = z.get(d, ZetaKind::padic).rational();
    Frf::Denominator den;
    for (auto [a, b] : golden_padic_denominator_d4()) den[Exponent{a, b}] += 1;
    out.push_back(make(tag(d) + "p-adic denominator", has_minimal_denominator(f, den),
                       str(den.size()) + " distinct factors, " +
                           str(golden_padic_denominator_d4().size()) + " with multiplicity"));
  } else {
    out.push_back(skip(tag(d) + "p-adic closed form", "no published form"));
  }
  if (auto g = golden_rational(d, ZetaKind::reduced)) {
    const Frf& f = z.get(d, ZetaKind::reduced).rational();
    out.push_back(make(tag(d) + "reduced closed form", rf_equal(f, *g)));
  } else {
    out.push_back(skip(tag(d) + "reduced closed form", "no published form"));
  }
  if (auto g = golden_topological(d)) {
    const Lff& f = z.get(d, ZetaKind::topological).topological();
    out.push_back(make(tag(d) + "topological closed form", lf_equal(f, *g)));
  } else {
    out.push_back(skip(tag(d) + "topological closed form", "no published form"));
  }
  if (auto g = golden_c(d)) {
    const Rational& c = z.c(d);
    out.push_back(make(tag(d) + "c_d", c == *g, "computed " + c.get_str() +
                                                    ", published " + g->get_str()));
  }
  return out;
}

std::vector<Check> verify_functional_equations(int d, ZetaProvider& z) {
  std::vector<Check> out;
  const int D = rank_D(d);
  const Frf& padic = z.get(d, ZetaKind::padic).rational();
  out.push_back(make(tag(d) + "p-adic functional equation", check_functional_equation(padic, D)));
  Frf ratio = ratio_at_s_zero(padic, D);
  out.push_back(make(tag(d) + "p-adic ratio at s=0 equals 1",
                     rf_equal(ratio, Frf(P::constant(q_arena(), 1))), ratio.to_string()));
  const Frf& no = z.get(d, ZetaKind::no_overlap).rational();
  out.push_back(make(tag(d) + "no-overlap functional equation", check_functional_equation(no, D)));
  Frf via_g = zeta_no_overlap(d, NoOverlapRoute::via_G).rational();
  out.push_back(make(tag(d) + "no-overlap routes agree", rf_equal(no, via_g)));
  std::vector<Frf> parts;
  long good = 0;
  const auto words = dyck_words(binom2(d));
  for (const auto& w : words) {
    const Frf& f = z.get(d, ZetaKind::overlap, w).rational();
    if (check_functional_equation(f, D)) ++good;
    parts.push_back(f);
  }
  out.push_back(make(tag(d) + "overlap functional equations",
                     good == static_cast<long>(words.size()),
                     str(good) + "/" + str(words.size()) + " Dyck words"));
  out.push_back(make(tag(d) + "overlap types sum to the p-adic zeta function",
                     rf_equal(rf_sum(parts), padic)));
  return out;
}

std::vector<Check> verify_poles(int d, ZetaProvider& z) {
  std::vector<Check> out;
  const int D = rank_D(d);
  const Rational c = z.c(d);
  PoleReport rep = pole_report(d, z.get(d, ZetaKind::reduced), z.get(d, ZetaKind::topological), c);
  Rational fact = 1;
  for (int i = 2; i < D; ++i) fact *= i;
  const Rational top_res = Rational((D - 1) % 2 ? -1 : 1) / fact;
  const Rational red_res = D % 2 ? Rational(-c) : c;
  out.push_back(make(tag(d) + "reduced pole order at t=1 equals D",
                     rep.reduced_order_at_1 == D, str(rep.reduced_order_at_1)));
  out.push_back(make(tag(d) + "reduced residue at t=1 equals (-1)^D c_d",
                     rep.reduced_residue_at_1 == red_res,
                     rep.reduced_residue_at_1.get_str() + " vs " + red_res.get_str()));
  out.push_back(make(tag(d) + "topological degree equals -D", rep.top_degree == -D,
                     str(rep.top_degree)));
  out.push_back(make(tag(d) + "topological pole at s=0 is simple", rep.top_pole_order_at_0 == 1,
                     str(rep.top_pole_order_at_0)));
  out.push_back(make(tag(d) + "topological residue at s=0 equals (-1)^(D-1)/(D-1)!",
                     rep.top_residue_at_0 == top_res,
                     rep.top_residue_at_0.get_str() + " vs " + top_res.get_str()));
  out.push_back(make(tag(d) + "topological limit at infinity equals c_d",
                     rep.top_limit_at_infinity == c,
                     rep.top_limit_at_infinity.get_str() + " vs " + c.get_str()));
  return out;
}

std::vector<Check> verify_oracle(int d, long p, int order) {
  RouteComparison rc = compare_routes(d, p, order);
  std::string detail;
  for (int n = 0; n <= order; ++n) {
    if (n) detail += ", ";
    detail += rc.series[n].get_str();
    if (rc.gss[n] != rc.series[n] || rc.brute[n] != rc.series[n]) {
      detail += " (gss " + rc.gss[n].get_str() + ", brute " + rc.brute[n].get_str() + ")";
    }
  }
  return {make(tag(d) + "p=" + str(p) + " series, partition sum and brute force agree to t^" +
                   str(order),
               rc.agree(), detail)};
}

std::vector<Check> verify_reciprocity(int d, int random_monoids, unsigned seed) {
  std::vector<Check> out;
  const int dp = binom2(d);
  const int D = d + dp;

  // H_{I,J} reciprocity for every K, L.
  {
    std::map<std::pair<Subset, Subset>, Frf> h;
    for (const auto& I : all_subsets(d - 1)) {
      for (const auto& J : all_subsets(dp - 1)) h.emplace(std::make_pair(I, J), h_genfun(I, J, d));
    }
    ArenaPtr arena = h.begin()->second.arena();
    Exponent xy(D, 0);
    xy[d - 1] = 1;
    xy[D - 1] = 1;
    const P shift = P::monomial(arena, xy);
    const Subset fullI = range(1, d - 1), fullJ = range(1, dp - 1);
    long n = 0, bad = 0;
    for (const auto& K : all_subsets(d - 1)) {
      for (const auto& L : all_subsets(dp - 1)) {
        const Subset Kc = set_minus(fullI, K), Lc = set_minus(fullJ, L);
        std::vector<Frf> lhs, rhs;
        for (const auto& [key, f] : h) {
          if (includes(key.first, K) && includes(key.second, L)) lhs.push_back(rf_invert_variables(f));
          if (includes(key.first, Kc) && includes(key.second, Lc)) rhs.push_back(rf_scale(f, shift));
        }
        Frf r = rf_sum(rhs);
        if (D % 2) r = negate(r);
        ++n;
        if (!rf_equal(rf_sum(lhs), r)) ++bad;
      }
    }
    out.push_back(make(tag(d) + "H_{I,J} reciprocity", bad == 0,
                       str(n - bad) + "/" + str(n) + " pairs (K, L)"));
  }

  // The monoids E_sigma and E_no with their regions.
  {
    ReciprocityTally t;
    std::set<Permutation> seen;
    for (const auto& wp : enumerate_Wd(d)) {
      DiophantineMonoid mon = monoid_of_sigma(wp.sigma, d);
      if (seen.insert(wp.sigma).second) monoid_reciprocity(mon, t);
      inversion(mon, a_set(wp, d), c_set(wp, d), t);
    }
    DiophantineMonoid eno = monoid_no_overlap(d);
    monoid_reciprocity(eno, t);
    for (const auto& I : all_subsets(d - 1)) {
      for (const auto& J : all_subsets(dp - 1)) inversion(eno, a_set_ij(I, J, d), c_set_ij(I, J, d), t);
    }
    tally_checks(tag(d) + "region corpus: ", t, out);
  }

  // Random small monoids with a positive point.
  if (random_monoids > 0) {
    ReciprocityTally t;
    std::mt19937 rng(seed);
    for (int k = 0; k < random_monoids; ++k) {
      const int m = 3 + k % 3;
      DiophantineMonoid mon = random_monoid(rng, m);
      monoid_reciprocity(mon, t);
      const Support full = range(1, m);
      for (const auto& A : minimal_supports(mon)) inversion(mon, A, full, t);
    }
    tally_checks(str(random_monoids) + " random monoids: ", t, out);
  }
  return out;
}

std::vector<Check> verify_bijections(int d, int bound) {
  std::vector<Check> out;
  const int dp = binom2(d);
  const int D = d + dp;
  const auto W = enumerate_Wd(d);
  const std::vector<int> ones(D, 1);

  // Region generating functions count the points of G_{I,sigma}.
  {
    long bad = 0;
    for (const auto& wp : W) {
      Frf g = genfun_region(region_of_wpair(wp, d));
      auto series = weighted_series(g, ones, bound);
      auto brute = count_by_weight(D, ones, bound, [&](const IntVector& x) {
        return in_G(x, wp.I, wp.sigma, d);
      });
      if (series != brute) ++bad;
    }
    out.push_back(make(tag(d) + "regions enumerate G_{I,sigma}", bad == 0,
                       str(W.size() - bad) + "/" + str(W.size()) + " pairs, total degree <= " +
                           str(bound)));
  }

  // Fibres of omega are in bijection with the points of G_{I,sigma}.
  {
    std::map<std::pair<Subset, Permutation>, std::set<IntVector>> fibres;
    long points = 0;
    bool ok = true;
    for (const auto& lambda : partitions_in_box(d, bound)) {
      if (partition_size(lambda) > bound) continue;
      const Partition mu = mu_of_lambda(lambda);
      for (const auto& nu : partitions_in_box(dp, mu[0])) {
        if (!partition_leq(nu, mu)) continue;
        Subset I;
        for (int i = 1; i < d; ++i) {
          if (lambda[i - 1] > lambda[i]) I.push_back(i);
        }
        const Permutation sigma = sigma_of_pair(lambda, nu);
        IntVector rs;
        for (int i = 0; i < d; ++i) rs.push_back(lambda[i] - (i + 1 < d ? lambda[i + 1] : 0));
        for (int j = 0; j < dp; ++j) rs.push_back(nu[j] - (j + 1 < dp ? nu[j + 1] : 0));
        ok = ok && wd_contains(I, sigma, d) && in_G(rs, I, sigma, d) &&
             fibres[{I, sigma}].insert(rs).second;
        ++points;
      }
    }
    std::vector<int> r_weight(d);
    for (int i = 0; i < d; ++i) r_weight[i] = i + 1;
    for (const auto& wp : W) {
      std::set<IntVector> from_g;
      for_each_bounded(d, r_weight, bound, [&](const IntVector& r) {
        for_each_bounded(dp, std::vector<int>(dp, 1), 2 * bound, [&](const IntVector& s) {
          IntVector rs = r;
          rs.insert(rs.end(), s.begin(), s.end());
          if (in_G(rs, wp.I, wp.sigma, d)) from_g.insert(rs);
        });
      });
      ok = ok && from_g == fibres[{wp.I, wp.sigma}];
    }
    out.push_back(make(tag(d) + "omega is a bijection onto G_{I,sigma}", ok,
                       str(points) + " pairs (lambda, nu) with |lambda| <= " + str(bound)));
  }

  // H_{I,J} is the disjoint union of the G_{I,sigma} with trivial Dyck word
  // and J_sigma = J.
  {
    const DyckWord trivial = std::string(dp, '0') + std::string(dp, '1');
    std::vector<WPair> trivial_pairs;
    for (const auto& wp : W) {
      if (dyck_of_sigma(wp.sigma, dp) == trivial) trivial_pairs.push_back(wp);
    }
    long points = 0;
    bool ok = true;
    for_each_bounded(D, ones, bound, [&](const IntVector& x) {
      Subset I, J;
      for (int i = 1; i < d; ++i) {
        if (x[i - 1] > 0) I.push_back(i);
      }
      for (int j = 1; j < dp; ++j) {
        if (x[d + j - 1] > 0) J.push_back(j);
      }
      int hits = 0;
      for (const auto& wp : trivial_pairs) {
        if (wp.I == I && j_set(wp.sigma, dp) == J && in_G(x, wp.I, wp.sigma, d)) ++hits;
      }
      const int expected = in_H(x, I, J, d) ? 1 : 0;
      ok = ok && hits == expected;
      points += expected;
    });
    out.push_back(make(tag(d) + "H_{I,J} is the disjoint union of trivial-word G_{I,sigma}", ok,
                       str(points) + " points of total degree <= " + str(bound)));
  }

  // The two formulas for submodule counts agree.
  {
    long n_cases = 0, bad = 0;
    for (int n = 1; n <= 4; ++n) {
      for (const auto& lambda : partitions_in_box(n, 4)) {
        for (const auto& mu : partitions_in_box(n, lambda[0])) {
          if (!partition_leq(mu, lambda)) continue;
          ++n_cases;
          if (alpha_count(lambda, mu) != alpha_alt(lambda, mu)) ++bad;
        }
      }
    }
    out.push_back(make("submodule-count formulas agree", bad == 0,
                       str(n_cases - bad) + "/" + str(n_cases) + " pairs, n <= 4, parts <= 4"));
  }

  // Gaussian multinomials as descent-set generating functions.
  {
    long n_cases = 0, bad = 0;
    for (int n = 1; n <= 5; ++n) {
      Permutation s(n);
      for (int i = 0; i < n; ++i) s[i] = i + 1;
      std::vector<Permutation> perms;
      do perms.push_back(s);
      while (std::next_permutation(s.begin(), s.end()));
      for (const auto& J : all_subsets(n - 1)) {
        P sum(q_arena());
        for (const auto& w : perms) {
          const Subset des = descent_set(w);
          if (includes(J, des)) sum += P::monomial(q_arena(), Exponent{coxeter_length(w)});
        }
        ++n_cases;
        if (gaussian_multinomial(n, J) != sum) ++bad;
      }
    }
    out.push_back(make("Gaussian multinomials count permutations by descent set", bad == 0,
                       str(n_cases - bad) + "/" + str(n_cases) + " cases, n <= 5"));
  }
  return out;
}

}  // namespace nilzeta
