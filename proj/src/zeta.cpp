#include "nilzeta/zeta.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "nilzeta/serialize.hpp"

namespace nilzeta {

namespace {

void require_d(int d) {
  if (d < 2) throw DomainError("d must be at least 2");
}

void require_script_S(const Permutation& sigma, int d) {
  if (!in_script_S(sigma, binom2(d))) {
    throw DomainError("permutation " + permutation_string(sigma) +
                      " is not in S_{2d'}");
  }
}

const std::vector<int>& tuple(int i, int d) {
  // Tuples are requested many times per pair; memoize per d.
  thread_local int cached_d = -1;
  thread_local std::vector<std::vector<int>> table;
  if (cached_d != d) {
    table.clear();
    for (int k = 1; k <= 2 * binom2(d); ++k) {
      table.push_back(corresponding_tuple(k, d));
    }
    cached_d = d;
  }
  return table[i - 1];
}

// Runs f(0..n-1) on a pool of threads and returns results in index order.
template <class T, class F>
std::vector<T> parallel_map(long n, int threads, F f,
                            const std::function<void(long, long)>& progress) {
  std::vector<std::optional<T>> out(n);
  std::atomic<long> next{0};
  std::atomic<long> done{0};
  std::mutex mu;
  std::exception_ptr error;
  auto worker = [&]() {
    while (true) {
      const long i = next.fetch_add(1);
      if (i >= n) return;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (error) return;
      }
      // The progress callback may throw to cancel the run.
      try {
        out[i] = f(i);
        const long k = done.fetch_add(1) + 1;
        if (progress) {
          std::lock_guard<std::mutex> lock(mu);
          progress(k, n);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  const int pool = std::max(1, threads);
  if (pool == 1) {
    worker();
  } else {
    std::vector<std::thread> ts;
    for (int t = 0; t < pool; ++t) ts.emplace_back(worker);
    for (auto& t : ts) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<T> result;
  result.reserve(n);
  for (auto& x : out) result.push_back(std::move(*x));
  return result;
}

// Moves a polynomial in q_arena() into qt_arena() (t-exponent zero).
LaurentPolynomial lift_q_to_qt(const LaurentPolynomial& p) {
  return poly_substitute(p, {Exponent{1, 0}}, qt_arena());
}

// Sum of the coefficients of a q-polynomial.
Integer value_at_one(const LaurentPolynomial& p) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s.get_num();
}

// chi(piece) as a factored rational function in the map's target arena.
Frf piece_image(const SimplicialPiece& piece, const NumericalDataMap& map,
                const LaurentPolynomial& weight) {
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& b : piece.box_points) terms.emplace_back(map.apply(b), 1);
  Frf::Denominator den;
  for (const auto& g : piece.quasigens) {
    Exponent e = map.apply(g);
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) {
      throw SingularSubstitution("quasigenerator supported on slack columns");
    }
    den[e] += 1;
  }
  LaurentPolynomial num(map.target, std::move(terms));
  return Frf(poly_mul(num, weight), std::move(den));
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

std::vector<WPair> pairs_with_word(int d, const std::optional<DyckWord>& w) {
  std::vector<WPair> all = enumerate_Wd(d);
  if (!w) return all;
  std::vector<WPair> out;
  for (auto& p : all) {
    if (dyck_of_sigma(p.sigma, binom2(d)) == *w) out.push_back(std::move(p));
  }
  return out;
}

struct PadicTerm {
  Frf value;
  long pieces;
};

PadicTerm padic_term(const WPair& wp, int d) {
  Region region = region_of_wpair(wp, d);
  NumericalDataMap map = numerical_map(wp.sigma, d);
  LaurentPolynomial one = LaurentPolynomial::constant(qt_arena(), 1);
  std::vector<Frf> parts;
  for (const auto& piece : region.pieces) {
    parts.push_back(piece_image(piece, map, one));
  }
  Frf sum = parts.empty() ? Frf(qt_arena()) : rf_sum(std::move(parts));
  sum = rf_scale(sum, lift_q_to_qt(gmc(wp, d)));
  return {std::move(sum), static_cast<long>(region.pieces.size())};
}

ZetaResult padic_over(int d, const std::optional<DyckWord>& w,
                      const ComputeOptions& opts, ZetaKind kind) {
  Timer timer;
  std::vector<WPair> pairs = pairs_with_word(d, w);
  auto terms = parallel_map<PadicTerm>(
      static_cast<long>(pairs.size()), opts.threads,
      [&](long i) { return padic_term(pairs[i], d); }, opts.progress);
  ZetaResult r;
  r.d = d;
  r.kind = kind;
  r.word = w ? *w : "";
  std::vector<Frf> values;
  for (auto& t : terms) {
    r.provenance.pieces += t.pieces;
    values.push_back(std::move(t.value));
  }
  r.value = values.empty() ? Frf(qt_arena()) : rf_normalize(rf_sum(values));
  r.provenance.pairs = static_cast<long>(pairs.size());
  r.provenance.seconds = timer.seconds();
  r.provenance.route = "G";
  return r;
}

}  // namespace

int rank_D(int d) { return d + binom2(d); }

// ---------------------------------------------------------------------------
// E_sigma

Subset r_set(const Permutation& sigma, int d) {
  const int dp = binom2(d);
  Subset out;
  for (int i = 1; i < 2 * dp; ++i) {
    if (sigma[i - 1] > dp || sigma[i] > dp) out.push_back(i);
  }
  return out;
}

int slack_column(const Permutation& sigma, int d, int i) {
  Subset R = r_set(sigma, d);
  auto it = std::find(R.begin(), R.end(), i);
  if (it == R.end()) throw DomainError("index is not in R_sigma");
  return rank_D(d) + static_cast<int>(it - R.begin()) + 1;
}

IntMatrix phi_sigma(const Permutation& sigma, int d) {
  require_d(d);
  require_script_S(sigma, d);
  const int D = rank_D(d);
  Subset R = r_set(sigma, d);
  const int m = D + static_cast<int>(R.size());
  IntMatrix phi;
  for (std::size_t k = 0; k < R.size(); ++k) {
    const int i = R[k];
    IntVector row(m, 0);
    const auto& a = tuple(sigma[i - 1], d);
    const auto& b = tuple(sigma[i], d);
    for (int j = 0; j < D; ++j) row[j] = a[j] - b[j];
    row[D + k] = -1;
    phi.push_back(std::move(row));
  }
  return phi;
}

DiophantineMonoid monoid_of_sigma(const Permutation& sigma, int d) {
  IntMatrix phi = phi_sigma(sigma, d);
  const int D = rank_D(d);
  const int m = D + static_cast<int>(phi.size());
  Support slack;
  for (int c = D + 1; c <= m; ++c) slack.push_back(c);
  return DiophantineMonoid(std::move(phi), m, std::move(slack));
}

namespace {

// The pair-type values of sigma in the order they occur.
std::vector<int> large_order(const Permutation& sigma, int dp) {
  std::vector<int> out;
  for (int x : sigma) {
    if (x > dp) out.push_back(x);
  }
  return out;
}

// Feasibility of the W_d system; it only sees I and the order in which the
// pair-type values occur.
bool wd_feasible(const Subset& I, const std::vector<int>& order, int d) {
  std::vector<LinearConstraint> cons;
  auto unit = [&](int i, LinearConstraint::Rel rel, int rhs) {
    LinearConstraint c;
    c.coeffs.assign(d, Rational(0));
    c.coeffs[i - 1] = 1;
    c.rel = rel;
    c.rhs = rhs;
    cons.push_back(std::move(c));
  };
  for (int i = 1; i < d; ++i) {
    const bool in_i = std::binary_search(I.begin(), I.end(), i);
    unit(i, in_i ? LinearConstraint::Rel::ge : LinearConstraint::Rel::eq,
         in_i ? 1 : 0);
  }
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const int i = order[a];
      const int j = order[b];
      LinearConstraint c;
      const auto& vi = tuple(i, d);
      const auto& vj = tuple(j, d);
      for (int k = 0; k < d; ++k) c.coeffs.emplace_back(vi[k] - vj[k]);
      c.rel = LinearConstraint::Rel::ge;
      c.rhs = i < j ? 1 : 0;
      cons.push_back(std::move(c));
    }
  }
  LinearConstraint nonzero;
  nonzero.coeffs.assign(d, Rational(1));
  nonzero.rel = LinearConstraint::Rel::ge;
  nonzero.rhs = 1;
  cons.push_back(std::move(nonzero));
  return lp_feasible(d, cons);
}

// Feasibility of the full system defining G_{I,sigma} in (r, s). Strict
// inequalities become ">= 1", which is exact for homogeneous systems.
bool g_feasible(const Subset& I, const Permutation& sigma, int d) {
  const int D = rank_D(d);
  std::vector<LinearConstraint> cons;
  for (int i = 1; i < d; ++i) {
    LinearConstraint c;
    c.coeffs.assign(D, Rational(0));
    c.coeffs[i - 1] = 1;
    const bool in_i = std::binary_search(I.begin(), I.end(), i);
    c.rel = in_i ? LinearConstraint::Rel::ge : LinearConstraint::Rel::eq;
    c.rhs = in_i ? 1 : 0;
    cons.push_back(std::move(c));
  }
  for (std::size_t k = 0; k + 1 < sigma.size(); ++k) {
    LinearConstraint c;
    const auto& a = tuple(sigma[k], d);
    const auto& b = tuple(sigma[k + 1], d);
    for (int j = 0; j < D; ++j) c.coeffs.emplace_back(a[j] - b[j]);
    c.rel = LinearConstraint::Rel::ge;
    c.rhs = sigma[k] < sigma[k + 1] ? 1 : 0;
    cons.push_back(std::move(c));
  }
  return lp_feasible(D, cons);
}

}  // namespace

bool wd_contains(const Subset& I, const Permutation& sigma, int d) {
  require_d(d);
  const int dp = binom2(d);
  if (!in_script_S(sigma, dp)) return false;
  return wd_feasible(I, large_order(sigma, dp), d) && g_feasible(I, sigma, d);
}

std::vector<WPair> enumerate_Wd(int d) {
  require_d(d);
  const int dp = binom2(d);
  std::vector<Permutation> sigmas = enumerate_script_S(dp);
  std::vector<WPair> out;
  for (const auto& I : all_subsets(d - 1)) {
    std::map<std::vector<int>, bool> memo;
    for (const auto& s : sigmas) {
      std::vector<int> key = large_order(s, dp);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, wd_feasible(I, key, d)).first;
      if (it->second && g_feasible(I, s, d)) out.push_back({I, s});
    }
  }
  return out;
}

Support a_set(const WPair& wp, int d) {
  const int D = rank_D(d);
  Support A = wp.I;
  for (int j : j_set(wp.sigma, binom2(d))) A.push_back(d + j);
  Subset R = r_set(wp.sigma, d);
  for (std::size_t k = 0; k < R.size(); ++k) {
    const int i = R[k];
    if (wp.sigma[i - 1] < wp.sigma[i]) A.push_back(D + static_cast<int>(k) + 1);
  }
  std::sort(A.begin(), A.end());
  return A;
}

Support c_set(const WPair& wp, int d) {
  const int D = rank_D(d);
  Support C = wp.I;
  for (int j : j_set(wp.sigma, binom2(d))) C.push_back(d + j);
  C.push_back(d);
  C.push_back(D);
  const int r = static_cast<int>(r_set(wp.sigma, d).size());
  for (int k = 1; k <= r; ++k) C.push_back(D + k);
  std::sort(C.begin(), C.end());
  C.erase(std::unique(C.begin(), C.end()), C.end());
  return C;
}

Region region_of_wpair(const WPair& wp, int d, const DecomposeOptions& opts) {
  DiophantineMonoid mon = monoid_of_sigma(wp.sigma, d);
  return decompose_region(mon, a_set(wp, d), c_set(wp, d), opts);
}

LaurentPolynomial gmc(const WPair& wp, int d) {
  const int dp = binom2(d);
  LaurentPolynomial result =
      wp.I.empty() ? LaurentPolynomial::constant(q_arena(), 1)
                   : gaussian_multinomial(d, wp.I, QVar::q_inverse);
  std::vector<int> chain{0};
  for (int j : ascent_set(wp.sigma)) chain.push_back(j);
  chain.push_back(2 * dp);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    auto [l_cur, m_cur] = lm_sigma(wp.sigma, chain[i], dp);
    auto [l_prev, m_prev] = lm_sigma(wp.sigma, chain[i - 1], dp);
    (void)l_prev;
    result = result * gaussian_binomial(l_cur - m_prev, m_cur - m_prev,
                                        QVar::q_inverse);
  }
  return result;
}

Integer mc(const WPair& wp, int d) { return value_at_one(gmc(wp, d)); }

// ---------------------------------------------------------------------------
// E_no

DiophantineMonoid monoid_no_overlap(int d) {
  require_d(d);
  const int D = rank_D(d);
  IntVector row(D + 1, -1);
  for (int i = 0; i < d - 2; ++i) row[i] = 0;
  row[d - 2] = 1;
  row[d - 1] = 2;
  return DiophantineMonoid({row}, D + 1, {D + 1});
}

Support a_set_ij(const Subset& I, const Subset& J, int d) {
  Support A = I;
  for (int j : J) A.push_back(d + j);
  std::sort(A.begin(), A.end());
  return A;
}

Support c_set_ij(const Subset& I, const Subset& J, int d) {
  const int D = rank_D(d);
  Support C = a_set_ij(I, J, d);
  C.push_back(d);
  C.push_back(D);
  C.push_back(D + 1);
  std::sort(C.begin(), C.end());
  C.erase(std::unique(C.begin(), C.end()), C.end());
  return C;
}

std::vector<int> special_ray_order(const RaySet& rays, int d) {
  const int D = rank_D(d);
  const std::size_t m = static_cast<std::size_t>(D + 1);
  auto unit_sum = [&](std::vector<std::pair<int, long>> parts) {
    IntVector v(m, 0);
    for (auto [i, c] : parts) v[i - 1] += c;
    return v;
  };
  std::vector<IntVector> first;
  for (int i = 1; i <= d - 2; ++i) first.push_back(unit_sum({{i, 1}}));
  first.push_back(unit_sum({{d - 1, 1}, {D + 1, 1}}));
  for (int i = d + 1; i <= D; ++i) first.push_back(unit_sum({{d, 1}, {i, 2}}));
  first.push_back(unit_sum({{d, 1}, {D + 1, 2}}));
  std::vector<int> order;
  for (const auto& v : first) {
    auto it = std::find(rays.rays.begin(), rays.rays.end(), v);
    if (it == rays.rays.end()) {
      throw std::logic_error("generator of C_0 is not an extreme ray");
    }
    order.push_back(static_cast<int>(it - rays.rays.begin()));
  }
  for (int i = 0; i < static_cast<int>(rays.rays.size()); ++i) {
    if (std::find(order.begin(), order.end(), i) == order.end()) {
      order.push_back(i);
    }
  }
  return order;
}

Region region_of_ij(const Subset& I, const Subset& J, int d,
                    const DecomposeOptions& opts) {
  DiophantineMonoid mon = monoid_no_overlap(d);
  RaySet rays = extreme_rays(mon);
  DecomposeOptions o = opts;
  if (o.ray_order.empty()) o.ray_order = special_ray_order(rays, d);
  return decompose_region(mon, rays, a_set_ij(I, J, d), c_set_ij(I, J, d), o);
}

Frf h_genfun(const Subset& I, const Subset& J, int d) {
  const int D = rank_D(d);
  Region region = region_of_ij(I, J, d);
  ArenaPtr arena = xyz_arena(d, binom2(d), 0);
  NumericalDataMap map;
  map.kind = NumericalDataMap::Kind::no_overlap;
  map.target = arena;
  for (int i = 0; i < D; ++i) {
    Exponent e(D, 0);
    e[i] = 1;
    map.images.push_back(std::move(e));
  }
  LaurentPolynomial one = LaurentPolynomial::constant(arena, 1);
  std::vector<Frf> parts;
  for (const auto& p : region.pieces) parts.push_back(piece_image(p, map, one));
  if (parts.empty()) return Frf(arena);
  return rf_sum(std::move(parts));
}

// ---------------------------------------------------------------------------
// Numerical data maps

std::vector<Exponent> NumericalDataMap::with_slack(int slack) const {
  std::vector<Exponent> out = images;
  for (int i = 0; i < slack; ++i) out.emplace_back(target->size(), 0);
  return out;
}

Exponent NumericalDataMap::apply(const IntVector& alpha) const {
  Exponent e(target->size(), 0);
  const std::size_t n = std::min(alpha.size(), images.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i] == 0) continue;
    for (std::size_t j = 0; j < e.size(); ++j) {
      e[j] += static_cast<int>(alpha[i]) * images[i][j];
    }
  }
  return e;
}

NumericalDataMap numerical_map(const Permutation& sigma, int d) {
  require_d(d);
  require_script_S(sigma, d);
  const int dp = binom2(d);
  const int D = rank_D(d);
  NumericalDataMap map;
  map.kind = NumericalDataMap::Kind::sigma;
  map.target = qt_arena();
  std::vector<int> weight(2 * dp + 1, 0);  // M_k (L_k - M_k), k = 1..2d'
  for (int k = 1; k <= 2 * dp; ++k) {
    auto [L, M] = lm_sigma(sigma, k, dp);
    weight[k] = M * (L - M);
  }
  for (int c = 0; c < D; ++c) {
    int qexp = 0;
    for (int k = 1; k <= 2 * dp; ++k) {
      const int here = tuple(sigma[k - 1], d)[c];
      const int next = k < 2 * dp ? tuple(sigma[k], d)[c] : 0;
      qexp += weight[k] * (here - next);
    }
    int texp;
    if (c < d) {
      const int i = c + 1;
      qexp += i * (d - i);
      texp = i;
    } else {
      const int j = c - d + 1;
      qexp += j * d;
      texp = j;
    }
    map.images.push_back({qexp, texp});
  }
  return map;
}

NumericalDataMap numerical_map_no_overlap(int d) {
  require_d(d);
  const int dp = binom2(d);
  NumericalDataMap map;
  map.kind = NumericalDataMap::Kind::no_overlap;
  map.target = qt_arena();
  for (int i = 1; i <= d; ++i) map.images.push_back({i * (d - i), i});
  for (int j = 1; j <= dp; ++j) map.images.push_back({d * j + j * (dp - j), j});
  return map;
}

NumericalDataMap numerical_map_reduced(int d) {
  require_d(d);
  const int dp = binom2(d);
  NumericalDataMap map;
  map.kind = NumericalDataMap::Kind::reduced;
  map.target = t_arena();
  for (int i = 1; i <= d; ++i) map.images.push_back({i});
  for (int j = 1; j <= dp; ++j) map.images.push_back({j});
  return map;
}

// ---------------------------------------------------------------------------
// Zeta functions

std::string kind_name(ZetaKind kind) {
  switch (kind) {
    case ZetaKind::padic: return "padic";
    case ZetaKind::overlap: return "overlap";
    case ZetaKind::no_overlap: return "no-overlap";
    case ZetaKind::reduced: return "reduced";
    case ZetaKind::topological: return "topological";
  }
  return "";
}

std::optional<ZetaKind> parse_kind(const std::string& name) {
  for (ZetaKind k : {ZetaKind::padic, ZetaKind::overlap, ZetaKind::no_overlap,
                     ZetaKind::reduced, ZetaKind::topological}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

Frf padic_summand(const WPair& wp, int d) { return padic_term(wp, d).value; }

ZetaResult zeta_padic(int d, const ComputeOptions& opts) {
  require_d(d);
  return padic_over(d, std::nullopt, opts, ZetaKind::padic);
}

ZetaResult zeta_overlap(int d, const DyckWord& w, const ComputeOptions& opts) {
  require_d(d);
  if (!is_dyck_word(w) || static_cast<int>(w.size()) != 2 * binom2(d)) {
    throw DomainError("'" + w + "' is not a Dyck word of length 2d'");
  }
  return padic_over(d, w, opts, ZetaKind::overlap);
}

ZetaResult zeta_no_overlap(int d, NoOverlapRoute route,
                           const ComputeOptions& opts) {
  require_d(d);
  const int dp = binom2(d);
  if (route == NoOverlapRoute::via_G) {
    DyckWord trivial = std::string(dp, '0') + std::string(dp, '1');
    ZetaResult r = padic_over(d, trivial, opts, ZetaKind::no_overlap);
    r.word.clear();
    return r;
  }
  Timer timer;
  std::vector<std::pair<Subset, Subset>> index;
  for (const auto& I : all_subsets(d - 1)) {
    for (const auto& J : all_subsets(dp - 1)) index.emplace_back(I, J);
  }
  DiophantineMonoid mon = monoid_no_overlap(d);
  RaySet rays = extreme_rays(mon);
  DecomposeOptions dopts;
  dopts.ray_order = special_ray_order(rays, d);
  NumericalDataMap map = numerical_map_no_overlap(d);
  auto terms = parallel_map<PadicTerm>(
      static_cast<long>(index.size()), opts.threads,
      [&](long k) {
        const auto& [I, J] = index[k];
        Region region = decompose_region(mon, rays, a_set_ij(I, J, d),
                                         c_set_ij(I, J, d), dopts);
        LaurentPolynomial w = LaurentPolynomial::constant(q_arena(), 1);
        if (!I.empty()) w = gaussian_multinomial(d, I, QVar::q_inverse);
        if (!J.empty()) w = w * gaussian_multinomial(dp, J, QVar::q_inverse);
        LaurentPolynomial weight = lift_q_to_qt(w);
        std::vector<Frf> parts;
        for (const auto& p : region.pieces) {
          parts.push_back(piece_image(p, map, weight));
        }
        Frf sum = parts.empty() ? Frf(qt_arena()) : rf_sum(std::move(parts));
        return PadicTerm{std::move(sum),
                         static_cast<long>(region.pieces.size())};
      },
      opts.progress);
  ZetaResult r;
  r.d = d;
  r.kind = ZetaKind::no_overlap;
  std::vector<Frf> values;
  for (auto& t : terms) {
    r.provenance.pieces += t.pieces;
    values.push_back(std::move(t.value));
  }
  r.value = rf_normalize(rf_sum(values));
  r.provenance.pairs = static_cast<long>(index.size());
  r.provenance.seconds = timer.seconds();
  r.provenance.route = "H";
  return r;
}

ZetaResult zeta_reduced(int d, const ComputeOptions& opts) {
  require_d(d);
  Timer timer;
  std::vector<WPair> pairs = enumerate_Wd(d);
  NumericalDataMap map = numerical_map_reduced(d);
  auto terms = parallel_map<PadicTerm>(
      static_cast<long>(pairs.size()), opts.threads,
      [&](long i) {
        Region region = region_of_wpair(pairs[i], d);
        LaurentPolynomial weight =
            LaurentPolynomial::constant(t_arena(), Rational(mc(pairs[i], d)));
        std::vector<Frf> parts;
        for (const auto& p : region.pieces) {
          parts.push_back(piece_image(p, map, weight));
        }
        Frf sum = parts.empty() ? Frf(t_arena()) : rf_sum(std::move(parts));
        return PadicTerm{std::move(sum),
                         static_cast<long>(region.pieces.size())};
      },
      opts.progress);
  ZetaResult r;
  r.d = d;
  r.kind = ZetaKind::reduced;
  std::vector<Frf> values;
  for (auto& t : terms) {
    r.provenance.pieces += t.pieces;
    values.push_back(std::move(t.value));
  }
  r.value = rf_normalize(rf_sum(values));
  r.provenance.pairs = static_cast<long>(pairs.size());
  r.provenance.seconds = timer.seconds();
  r.provenance.route = "G";
  return r;
}

namespace {

struct TopTerm {
  std::vector<Lff> parts;
  Rational c;
  long pieces = 0;
};

TopTerm top_term(const WPair& wp, int d) {
  DecomposeOptions dopts;
  dopts.with_points = false;
  dopts.max_dim_only = true;
  Region region = region_of_wpair(wp, d, dopts);
  NumericalDataMap map = numerical_map(wp.sigma, d);
  const Integer weight = mc(wp, d);
  const int D = rank_D(d);
  TopTerm out;
  out.c = 0;
  for (const auto& p : region.pieces) {
    if (p.dim != D) continue;
    std::vector<Lff::Factor> factors;
    Integer prod_b = 1;
    for (const auto& g : p.quasigens) {
      Exponent e = map.apply(g);
      if (e[1] <= 0) throw SingularSubstitution("quasigenerator maps to q^a");
      factors.emplace_back(e[0], e[1]);
      prod_b *= e[1];
    }
    const Rational c = Rational(weight * p.box_count);
    out.parts.push_back(Lff::from_factors(c, factors));
    out.c += c / Rational(prod_b);
    ++out.pieces;
  }
  return out;
}

}  // namespace

ZetaResult zeta_topological(int d, const ComputeOptions& opts) {
  require_d(d);
  Timer timer;
  std::vector<WPair> pairs = enumerate_Wd(d);
  auto terms = parallel_map<TopTerm>(
      static_cast<long>(pairs.size()), opts.threads,
      [&](long i) { return top_term(pairs[i], d); }, opts.progress);
  ZetaResult r;
  r.d = d;
  r.kind = ZetaKind::topological;
  std::vector<Lff> values;
  for (auto& t : terms) {
    r.provenance.pieces += t.pieces;
    for (auto& x : t.parts) values.push_back(std::move(x));
  }
  r.value = values.empty() ? Lff() : lf_normalize(lf_sum(values));
  r.provenance.pairs = static_cast<long>(pairs.size());
  r.provenance.seconds = timer.seconds();
  r.provenance.route = "G";
  return r;
}

Rational c_constant(int d, const ComputeOptions& opts) {
  require_d(d);
  std::vector<WPair> pairs = enumerate_Wd(d);
  auto terms = parallel_map<TopTerm>(
      static_cast<long>(pairs.size()), opts.threads,
      [&](long i) { return top_term(pairs[i], d); }, opts.progress);
  Rational c = 0;
  for (const auto& t : terms) c += t.c;
  return c;
}

// ---------------------------------------------------------------------------
// Checks

std::pair<int, Rational> pole_at_one(const Frf& f) {
  if (f.arena()->size() != 1) {
    throw StructuralError("pole_at_one needs a univariate function");
  }
  if (f.is_zero()) return {0, Rational(0)};
  LaurentPolynomial num = f.numerator();
  int vanish = 0;
  while (true) {
    auto q = num.divide_binomial(Exponent{1});
    if (!q) break;
    num = std::move(*q);
    ++vanish;
  }
  Rational value = 0;
  for (const auto& [e, c] : num.terms()) value += c;
  int total = 0;
  for (const auto& [e, k] : f.denominator()) {
    total += k;
    for (int i = 0; i < k; ++i) value /= e[0];
  }
  const int order = total - vanish;
  if (order % 2 != 0) value = -value;
  return {order, value};
}

std::pair<int, Rational> pole_at_zero(const Lff& f) {
  if (f.is_zero()) return {0, Rational(0)};
  const auto& coeffs = f.numerator().coefficients();
  int vanish = 0;
  while (coeffs[vanish] == 0) ++vanish;
  Rational value = coeffs[vanish];
  int k0 = 0;
  for (const auto& [factor, k] : f.denominator()) {
    const auto [a, b] = factor;
    if (a == 0) {
      k0 += k;
      for (int i = 0; i < k; ++i) value /= b;
      continue;
    }
    for (int i = 0; i < k; ++i) value /= -a;
  }
  return {k0 - vanish, value};
}

PoleReport pole_report(int d, const ZetaResult& reduced,
                       const ZetaResult& topological, const Rational& c_d,
                       const std::optional<ZetaResult>& padic) {
  if (reduced.d != d || topological.d != d || (padic && padic->d != d)) {
    throw DomainError("pole_report inputs were computed for a different d");
  }
  if (reduced.kind != ZetaKind::reduced ||
      topological.kind != ZetaKind::topological) {
    throw DomainError("pole_report needs reduced and topological results");
  }
  PoleReport rep;
  rep.c_d = c_d;
  auto [order, residue] = pole_at_one(reduced.rational());
  rep.reduced_order_at_1 = order;
  rep.reduced_residue_at_1 = residue;
  const Lff& top = topological.topological();
  rep.top_degree = top.degree();
  auto [order0, residue0] = pole_at_zero(top);
  rep.top_pole_order_at_0 = order0;
  rep.top_residue_at_0 = order0 == 1 ? residue0 : Rational(0);
  const int D = rank_D(d);
  if (!top.is_zero() && rep.top_degree == -D) {
    Rational lead = top.numerator().leading();
    for (const auto& [factor, k] : top.denominator()) {
      for (int i = 0; i < k; ++i) lead /= factor.second;
    }
    rep.top_limit_at_infinity = lead;
  }
  rep.functional_equation_holds =
      padic ? check_functional_equation(padic->rational(), D) : false;
  return rep;
}

bool check_functional_equation(const Frf& f, int D) {
  const ArenaPtr& arena = f.arena();
  if (arena->size() != 2) {
    throw StructuralError("functional equation needs a (q, t) function");
  }
  Frf inverted = rf_invert_variables(f);
  const int sign = D % 2 == 0 ? 1 : -1;
  LaurentPolynomial factor =
      LaurentPolynomial::monomial(arena, {D * (D - 1) / 2, D}, sign);
  return rf_equal(inverted, rf_scale(f, factor));
}

Frf ratio_at_s_zero(const Frf& f, int D) {
  LaurentPolynomial num = f.numerator();
  for (int i = 0; i < D; ++i) num = num.times_binomial({i, 1});
  Frf prod = rf_normalize(Frf(std::move(num), f.denominator()));
  return rf_substitute(prod, {Exponent{1}, Exponent{0}}, q_arena());
}

// ---------------------------------------------------------------------------
// Serialization and cache

nlohmann::json zeta_to_json(const ZetaResult& r) {
  nlohmann::json j;
  j["format_version"] = kCacheFormatVersion;
  j["d"] = r.d;
  j["kind"] = kind_name(r.kind);
  j["word"] = r.word;
  if (std::holds_alternative<Frf>(r.value)) {
    j["value"] = frf_to_json(r.rational());
  } else {
    j["value"] = lff_to_json(r.topological());
  }
  j["provenance"] = {{"seconds", r.provenance.seconds},
                     {"pairs", r.provenance.pairs},
                     {"pieces", r.provenance.pieces},
                     {"route", r.provenance.route}};
  return j;
}

ZetaResult zeta_from_json(const nlohmann::json& j) {
  ZetaResult r;
  r.d = j.at("d").get<int>();
  auto kind = parse_kind(j.at("kind").get<std::string>());
  if (!kind) throw StructuralError("unknown zeta kind in JSON");
  r.kind = *kind;
  r.word = j.value("word", "");
  if (r.kind == ZetaKind::topological) {
    r.value = lff_from_json(j.at("value"));
  } else {
    r.value = frf_from_json(j.at("value"));
  }
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    r.provenance.seconds = p.value("seconds", 0.0);
    r.provenance.pairs = p.value("pairs", 0L);
    r.provenance.pieces = p.value("pieces", 0L);
    r.provenance.route = p.value("route", "");
  }
  return r;
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) {
    const char* env = std::getenv("NILZETA_CACHE");
    dir_ = (env && *env) ? env : "./.nilzeta-cache";
  }
}

std::string ResultCache::key(int d, ZetaKind kind,
                             const std::string& word) const {
  std::string k = "d" + std::to_string(d) + "_" + kind_name(kind);
  if (!word.empty()) k += "_" + word;
  return k + "_v" + std::to_string(kCacheFormatVersion) + ".json";
}

std::optional<ZetaResult> ResultCache::load(int d, ZetaKind kind,
                                            const std::string& word) const {
  const std::filesystem::path path =
      std::filesystem::path(dir_) / key(d, kind, word);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.value("format_version", -1) != kCacheFormatVersion) {
      return std::nullopt;
    }
    ZetaResult r = zeta_from_json(j);
    if (r.d != d || r.kind != kind || r.word != word) return std::nullopt;
    const int D = rank_D(d);
    switch (kind) {
      case ZetaKind::padic:
      case ZetaKind::overlap:
      case ZetaKind::no_overlap:
        if (!check_functional_equation(r.rational(), D)) return std::nullopt;
        break;
      case ZetaKind::reduced:
        if (pole_at_one(r.rational()).first != D) return std::nullopt;
        break;
      case ZetaKind::topological:
        if (r.topological().degree() != -D) return std::nullopt;
        break;
    }
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const ZetaResult& r) const {
  std::filesystem::create_directories(dir_);
  const std::filesystem::path path =
      std::filesystem::path(dir_) / key(r.d, r.kind, r.word);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << zeta_to_json(r).dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nilzeta
