#include "nilzeta/cones.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace nilzeta {

namespace {

using IntegerVector = std::vector<Integer>;

long checked_long(__int128 v) {
  if (v > static_cast<__int128>(std::numeric_limits<long>::max()) ||
      v < static_cast<__int128>(std::numeric_limits<long>::min())) {
    throw std::overflow_error("integer overflow in ray arithmetic");
  }
  return static_cast<long>(v);
}

// Row reduces `rows` (over Q) in place to reduced row echelon form and
// returns the pivot columns.
std::vector<int> rref(std::vector<std::vector<Rational>>& rows, int ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (int j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

IntVector primitive_from_rational(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v) {
    Integer y = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
    ints.push_back(y);
  }
  IntVector out;
  for (auto& y : ints) {
    if (g != 0) y /= g;
    if (!y.fits_slong_p()) throw std::overflow_error("vector entry too large");
    out.push_back(y.get_si());
  }
  return out;
}

// Integer kernel vector of a (k-1) x k matrix of full row rank.
IntegerVector normal_vector(const std::vector<IntegerVector>& rows, int k) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> x(row.begin(), row.end());
    r.push_back(std::move(x));
  }
  std::vector<int> piv = rref(r, k);
  int free_col = -1;
  for (int c = 0; c < k; ++c) {
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) {
      free_col = c;
      break;
    }
  }
  std::vector<Rational> h(k, Rational(0));
  h[free_col] = 1;
  for (std::size_t i = 0; i < piv.size(); ++i) h[piv[i]] = -r[i][free_col];
  Integer l = 1;
  for (const auto& x : h) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntegerVector out;
  for (const auto& x : h) out.push_back(x.get_num() * (l / x.get_den()));
  return out;
}

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Echelon basis of a growing linear span, used by the triangulation.
class Span {
 public:
  explicit Span(std::size_t m) : m_(m) {}

  bool contains(const IntVector& v) const { return !reduce(v).has_value(); }

  void add(const IntVector& v) {
    auto red = reduce(v);
    if (!red) return;
    std::size_t p = 0;
    while ((*red)[p] == 0) ++p;
    rows_.push_back(std::move(*red));
    pivots_.push_back(static_cast<int>(p));
  }

  int dim() const { return static_cast<int>(rows_.size()); }

  IntegerVector project(const IntVector& v) const {
    IntegerVector out;
    for (int p : pivots_) out.emplace_back(v[p]);
    return out;
  }

 private:
  std::optional<IntegerVector> reduce(const IntVector& v) const {
    IntegerVector x(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const int p = pivots_[i];
      if (x[p] == 0) continue;
      Integer a = rows_[i][p];
      Integer b = x[p];
      for (std::size_t j = 0; j < m_; ++j) x[j] = x[j] * a - rows_[i][j] * b;
      Integer g = 0;
      for (const auto& y : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
      if (g > 1) {
        for (auto& y : x) y /= g;
      }
    }
    for (const auto& y : x) {
      if (y != 0) return x;
    }
    return std::nullopt;
  }

  std::size_t m_;
  std::vector<IntegerVector> rows_;
  std::vector<int> pivots_;
};

struct FacetInfo {
  int count = 0;
  int simplex = -1;
  int opposite = -1;
};

}  // namespace

// ---------------------------------------------------------------------------
// Linear feasibility

std::optional<std::vector<Rational>> lp_find_point(
    int nvars, const std::vector<LinearConstraint>& constraints) {
  const int rows = static_cast<int>(constraints.size());
  if (rows == 0) return std::vector<Rational>(nvars, Rational(0));
  int extra = 0;
  for (const auto& c : constraints) {
    if (static_cast<int>(c.coeffs.size()) != nvars) {
      throw StructuralError("constraint length does not match variable count");
    }
    if (c.rel != LinearConstraint::Rel::eq) ++extra;
  }
  const int ncols = nvars + extra + rows;  // original, slack, artificial
  std::vector<std::vector<Rational>> tab(rows,
                                         std::vector<Rational>(ncols + 1, 0));
  std::vector<int> basis(rows);
  int slack_col = nvars;
  for (int i = 0; i < rows; ++i) {
    const auto& c = constraints[i];
    Rational sign = c.rhs < 0 ? -1 : 1;
    for (int j = 0; j < nvars; ++j) tab[i][j] = sign * c.coeffs[j];
    tab[i][ncols] = sign * c.rhs;
    if (c.rel != LinearConstraint::Rel::eq) {
      Rational s = c.rel == LinearConstraint::Rel::ge ? -1 : 1;
      tab[i][slack_col++] = sign * s;
    }
    tab[i][nvars + extra + i] = 1;
    basis[i] = nvars + extra + i;
  }
  const int first_art = nvars + extra;
  std::vector<Rational> obj(ncols + 1, 0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < first_art; ++j) obj[j] -= tab[i][j];
    obj[ncols] -= tab[i][ncols];
  }
  while (true) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][ncols] / tab[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded in phase one cannot happen
    Rational piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational f = tab[i][enter];
      for (int j = 0; j <= ncols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (int j = 0; j <= ncols; ++j) obj[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  if (obj[ncols] != 0) return std::nullopt;
  std::vector<Rational> x(nvars, 0);
  for (int i = 0; i < rows; ++i) {
    if (basis[i] < nvars) x[basis[i]] = tab[i][ncols];
  }
  return x;
}

bool lp_feasible(int nvars, const std::vector<LinearConstraint>& constraints) {
  return lp_find_point(nvars, constraints).has_value();
}

// ---------------------------------------------------------------------------
// Linear algebra helpers

int matrix_rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  const int n = static_cast<int>(rows.front().size());
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return static_cast<int>(rref(r, n).size());
}

IntMatrix kernel_basis(const IntMatrix& a, int ncols) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != ncols) {
      throw StructuralError("matrix row length mismatch");
    }
    r.emplace_back(row.begin(), row.end());
  }
  std::vector<int> piv = rref(r, ncols);
  IntMatrix out;
  for (int f = 0; f < ncols; ++f) {
    if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    out.push_back(primitive_from_rational(v));
  }
  return out;
}

IntVector primitive(const IntVector& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::labs(x));
  if (g <= 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

SmithForm smith_form(const IntMatrix& columns, std::size_t m) {
  const std::size_t k = columns.size();
  // a is m x k with the given columns.
  std::vector<std::vector<Integer>> a(m, std::vector<Integer>(k));
  for (std::size_t j = 0; j < k; ++j) {
    if (columns[j].size() != m) throw StructuralError("column length mismatch");
    for (std::size_t i = 0; i < m; ++i) a[i][j] = columns[j][i];
  }
  std::vector<std::vector<Integer>> V(k, std::vector<Integer>(k, 0));
  for (std::size_t j = 0; j < k; ++j) V[j][j] = 1;
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : V) std::swap(row[x], row[y]);
  };
  // column y -= f * column x
  auto col_sub = [&](std::size_t y, std::size_t x, const Integer& f) {
    for (auto& row : a) row[y] -= f * row[x];
    for (auto& row : V) row[y] -= f * row[x];
  };
  SmithForm out;
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      std::size_t pi = m;
      std::size_t pj = k;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < k; ++j) {
          if (a[i][j] == 0) continue;
          if (pi == m || abs(a[i][j]) < abs(a[pi][pj])) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) throw DomainError("quasigenerators are linearly dependent");
      std::swap(a[pi], a[t]);
      if (pj != t) col_swap(pj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < k; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (a[t][j] == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_sub(j, t, f);
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[t][t] < 0) {
      for (auto& row : a) row[t] = -row[t];
      for (auto& row : V) row[t] = -row[t];
    }
    out.diagonal.push_back(a[t][t]);
  }
  out.V = std::move(V);
  return out;
}

// ---------------------------------------------------------------------------
// DiophantineMonoid

DiophantineMonoid::DiophantineMonoid(IntMatrix phi, int m, Support slack)
    : m_(m), slack_(std::move(slack)) {
  for (auto& row : phi) {
    if (static_cast<int>(row.size()) != m) {
      throw StructuralError("Phi row length differs from m");
    }
    IntMatrix trial = phi_;
    trial.push_back(row);
    if (matrix_rank(trial) > static_cast<int>(phi_.size())) {
      phi_.push_back(std::move(row));
    }
  }
}

int DiophantineMonoid::dim() const {
  RaySet r = extreme_rays(*this);
  return matrix_rank(r.rays);
}

Support support_of(const IntVector& v) {
  Support s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) s.push_back(static_cast<int>(i) + 1);
  }
  return s;
}

RaySet extreme_rays(const DiophantineMonoid& mon) {
  const int m = mon.m();
  if (m > 64) throw StructuralError("extreme_rays supports at most 64 columns");
  IntMatrix K = kernel_basis(mon.phi(), m);
  const int k = static_cast<int>(K.size());
  RaySet out;
  if (k == 0) return out;
  // Choose k coordinates on which the kernel projects isomorphically; the
  // cone {x in ker : x_P >= 0} is simplicial and seeds the iteration.
  std::vector<std::vector<Rational>> cols;
  for (int c = 0; c < m; ++c) {
    std::vector<Rational> col;
    for (int b = 0; b < k; ++b) col.emplace_back(K[b][c]);
    cols.push_back(std::move(col));
  }
  std::vector<int> chosen;
  {
    std::vector<std::vector<Rational>> acc;
    for (int c = 0; c < m && static_cast<int>(chosen.size()) < k; ++c) {
      auto trial = acc;
      trial.push_back(cols[c]);
      if (static_cast<int>(rref(trial, k).size()) > static_cast<int>(acc.size())) {
        acc.push_back(cols[c]);
        chosen.push_back(c);
      }
    }
  }
  std::vector<IntVector> rays;
  for (int target = 0; target < k; ++target) {
    // Solve sum_b y_b K[b][chosen[i]] = delta(i, target).
    std::vector<std::vector<Rational>> sys(k, std::vector<Rational>(k + 1));
    for (int i = 0; i < k; ++i) {
      for (int b = 0; b < k; ++b) sys[i][b] = K[b][chosen[i]];
      sys[i][k] = (i == target) ? 1 : 0;
    }
    rref(sys, k + 1);
    std::vector<Rational> x(m, Rational(0));
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < m; ++c) x[c] += sys[b][k] * K[b][c];
    }
    rays.push_back(primitive_from_rational(x));
  }
  std::uint64_t processed = 0;
  for (int c : chosen) processed |= (1ULL << c);
  auto zero_set = [&](const IntVector& v) {
    std::uint64_t z = 0;
    for (int c = 0; c < m; ++c) {
      if (((processed >> c) & 1ULL) && v[c] == 0) z |= (1ULL << c);
    }
    return z;
  };
  for (int c = 0; c < m; ++c) {
    if ((processed >> c) & 1ULL) continue;
    std::vector<IntVector> pos, neg, zer;
    for (auto& r : rays) {
      if (r[c] > 0) {
        pos.push_back(r);
      } else if (r[c] < 0) {
        neg.push_back(r);
      } else {
        zer.push_back(r);
      }
    }
    std::vector<std::uint64_t> zs;
    for (const auto& r : rays) zs.push_back(zero_set(r));
    std::vector<IntVector> next = pos;
    next.insert(next.end(), zer.begin(), zer.end());
    for (const auto& u : pos) {
      const std::uint64_t zu = zero_set(u);
      for (const auto& w : neg) {
        const std::uint64_t common = zu & zero_set(w);
        if (__builtin_popcountll(common) < k - 2) continue;
        bool adjacent = true;
        for (std::size_t i = 0; i < rays.size() && adjacent; ++i) {
          if (rays[i] == u || rays[i] == w) continue;
          if ((zs[i] & common) == common) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v(m);
        for (int j = 0; j < m; ++j) {
          __int128 val = static_cast<__int128>(u[c]) * w[j] -
                         static_cast<__int128>(w[c]) * u[j];
          v[j] = checked_long(val);
        }
        next.push_back(primitive(v));
      }
    }
    rays = std::move(next);
    processed |= (1ULL << c);
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  out.rays = std::move(rays);
  return out;
}

std::vector<Support> minimal_supports(const RaySet& rays) {
  std::set<Support> s;
  for (const auto& r : rays.rays) s.insert(support_of(r));
  return {s.begin(), s.end()};
}

std::vector<Support> minimal_supports(const DiophantineMonoid& mon) {
  return minimal_supports(extreme_rays(mon));
}

bool is_face_support(const DiophantineMonoid& mon, const Support& B) {
  const int m = mon.m();
  std::vector<LinearConstraint> cons;
  for (const auto& row : mon.phi()) {
    LinearConstraint c;
    c.coeffs.assign(row.begin(), row.end());
    c.rel = LinearConstraint::Rel::eq;
    cons.push_back(std::move(c));
  }
  for (int i = 1; i <= m; ++i) {
    LinearConstraint c;
    c.coeffs.assign(m, Rational(0));
    c.coeffs[i - 1] = 1;
    const bool in_b = std::binary_search(B.begin(), B.end(), i);
    c.rel = in_b ? LinearConstraint::Rel::ge : LinearConstraint::Rel::eq;
    c.rhs = in_b ? 1 : 0;
    cons.push_back(std::move(c));
  }
  return lp_feasible(m, cons);
}

// ---------------------------------------------------------------------------
// Triangulation

std::vector<std::vector<int>> triangulate(const std::vector<IntVector>& rays,
                                          const std::vector<int>& order_in) {
  const int n = static_cast<int>(rays.size());
  if (n == 0) return {std::vector<int>{}};
  std::vector<int> order = order_in;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<int>(order.size()) != n) {
    throw StructuralError("ray order must list every ray once");
  }
  const std::size_t m = rays.front().size();
  Span span(m);
  std::vector<std::vector<int>> simplices;
  std::map<std::vector<int>, IntegerVector> normals;
  for (int v : order) {
    if (simplices.empty()) {
      simplices.push_back({v});
      span.add(rays[v]);
      continue;
    }
    if (!span.contains(rays[v])) {
      span.add(rays[v]);
      for (auto& s : simplices) {
        s.push_back(v);
        std::sort(s.begin(), s.end());
      }
      normals.clear();
      continue;
    }
    const int k = span.dim();
    std::map<std::vector<int>, FacetInfo> facets;
    for (int si = 0; si < static_cast<int>(simplices.size()); ++si) {
      const auto& s = simplices[si];
      for (std::size_t o = 0; o < s.size(); ++o) {
        std::vector<int> f;
        for (std::size_t x = 0; x < s.size(); ++x) {
          if (x != o) f.push_back(s[x]);
        }
        FacetInfo& info = facets[f];
        ++info.count;
        info.simplex = si;
        info.opposite = s[o];
      }
    }
    const IntegerVector pv = span.project(rays[v]);
    std::vector<std::vector<int>> added;
    for (const auto& [f, info] : facets) {
      if (info.count != 1) continue;
      auto it = normals.find(f);
      if (it == normals.end()) {
        std::vector<IntegerVector> rows;
        for (int x : f) rows.push_back(span.project(rays[x]));
        IntegerVector h = k == 1 ? IntegerVector{Integer(1)}
                                 : normal_vector(rows, k);
        if (dot(h, span.project(rays[info.opposite])) < 0) {
          for (auto& x : h) x = -x;
        }
        it = normals.emplace(f, std::move(h)).first;
      }
      if (dot(it->second, pv) < 0) {
        std::vector<int> s = f;
        s.push_back(v);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

// ---------------------------------------------------------------------------
// Fundamental parallelepipeds

Integer box_count(const std::vector<IntVector>& quasigens, std::size_t m) {
  if (quasigens.empty()) return 1;
  SmithForm sf = smith_form(quasigens, m);
  Integer n = 1;
  for (const auto& s : sf.diagonal) n *= s;
  return n;
}

std::vector<IntVector> box_points(const std::vector<IntVector>& quasigens,
                                  std::size_t m) {
  const std::size_t k = quasigens.size();
  if (k == 0) return {IntVector(m, 0)};
  SmithForm sf = smith_form(quasigens, m);
  std::vector<long> radix;
  for (const auto& s : sf.diagonal) {
    if (!s.fits_slong_p()) throw std::overflow_error("lattice index too large");
    radix.push_back(s.get_si());
  }
  std::vector<IntVector> out;
  std::vector<long> c(k, 0);
  while (true) {
    // a = V b with b_i = c_i / s_i, reduced into (0, 1].
    std::vector<Rational> a(k, Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < k; ++i) {
        if (c[i] == 0) continue;
        a[j] += Rational(sf.V[j][i] * c[i], radix[i]);
      }
      a[j].canonicalize();
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), a[j].get_num_mpz_t(), a[j].get_den_mpz_t());
      a[j] -= fl;
      if (a[j] == 0) a[j] = 1;
    }
    IntVector x(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < k; ++j) s += a[j] * quasigens[j][i];
      if (s.get_den() != 1) throw std::logic_error("box point is not integral");
      x[i] = s.get_num().get_si();
    }
    out.push_back(std::move(x));
    std::size_t pos = 0;
    while (pos < k && ++c[pos] == radix[pos]) c[pos++] = 0;
    if (pos == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Regions

Region decompose_region(const DiophantineMonoid& mon, const Support& A,
                        const Support& C, const DecomposeOptions& opts) {
  return decompose_region(mon, extreme_rays(mon), A, C, opts);
}

Region decompose_region(const DiophantineMonoid& mon, const RaySet& all,
                        const Support& A, const Support& C,
                        const DecomposeOptions& opts) {
  if (!std::includes(C.begin(), C.end(), A.begin(), A.end())) {
    throw DomainError("decompose_region needs A subset of C");
  }
  const std::size_t m = static_cast<std::size_t>(mon.m());
  Region region{mon, A, C, {}};
  // Rays of the face F_{E,C}.
  std::vector<int> face_idx;
  for (int i = 0; i < static_cast<int>(all.rays.size()); ++i) {
    Support s = support_of(all.rays[i]);
    if (std::includes(C.begin(), C.end(), s.begin(), s.end())) {
      face_idx.push_back(i);
    }
  }
  std::vector<IntVector> face_rays;
  for (int i : face_idx) face_rays.push_back(all.rays[i]);
  std::vector<int> order;
  if (!opts.ray_order.empty()) {
    for (int i : opts.ray_order) {
      auto it = std::find(face_idx.begin(), face_idx.end(), i);
      if (it != face_idx.end()) {
        order.push_back(static_cast<int>(it - face_idx.begin()));
      }
    }
  }
  const int full_dim = matrix_rank(all.rays);
  if (face_rays.size() > 128) {
    throw StructuralError("decompose_region supports at most 128 face rays");
  }
  std::uint64_t amask = 0;
  for (int a : A) amask |= (1ULL << (a - 1));
  std::vector<std::uint64_t> supp_mask;
  for (const auto& r : face_rays) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (r[i] != 0) s |= (1ULL << i);
    }
    supp_mask.push_back(s);
  }
  auto simplices = triangulate(face_rays, order);
  struct Key {
    std::uint64_t lo, hi;
    bool operator==(const Key& o) const { return lo == o.lo && hi == o.hi; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()(k.lo * 0x9E3779B97F4A7C15ULL ^ k.hi);
    }
  };
  std::unordered_set<Key, KeyHash> seen;
  std::vector<std::vector<int>> cells;
  for (const auto& s : simplices) {
    const int k = static_cast<int>(s.size());
    if (opts.max_dim_only && k != full_dim) continue;
    const unsigned lo_bound = opts.max_dim_only ? (1u << k) - 1 : 0;
    for (unsigned sub = lo_bound; sub < (1u << k); ++sub) {
      std::uint64_t supp = 0;
      Key key{0, 0};
      for (int b = 0; b < k; ++b) {
        if (!(sub & (1u << b))) continue;
        supp |= supp_mask[s[b]];
        if (s[b] < 64) {
          key.lo |= (1ULL << s[b]);
        } else {
          key.hi |= (1ULL << (s[b] - 64));
        }
      }
      if ((supp & amask) != amask) continue;
      if (!seen.insert(key).second) continue;
      std::vector<int> cell;
      for (int b = 0; b < k; ++b) {
        if (sub & (1u << b)) cell.push_back(s[b]);
      }
      cells.push_back(std::move(cell));
    }
  }
  // Pieces are listed by dimension, then lexicographically by ray index.
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& cell : cells) {
    SimplicialPiece piece;
    for (int i : cell) piece.quasigens.push_back(face_rays[i]);
    piece.dim = static_cast<int>(cell.size());
    if (opts.with_points) {
      piece.box_points = box_points(piece.quasigens, m);
      piece.box_count = static_cast<long>(piece.box_points.size());
    } else {
      piece.box_count = box_count(piece.quasigens, m);
    }
    region.pieces.push_back(std::move(piece));
  }
  return region;
}

Frf genfun_piece(const SimplicialPiece& piece, const ArenaPtr& arena) {
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& b : piece.box_points) {
    terms.emplace_back(Exponent(b.begin(), b.end()), 1);
  }
  Frf::Denominator den;
  for (const auto& g : piece.quasigens) den[Exponent(g.begin(), g.end())] += 1;
  return Frf(LaurentPolynomial(arena, std::move(terms)), std::move(den));
}

Frf genfun_region(const Region& region) {
  ArenaPtr arena = z_arena(region.monoid.m());
  std::vector<Frf> parts;
  for (const auto& p : region.pieces) {
    if (p.box_points.empty()) {
      throw StructuralError("genfun_region needs pieces with box points");
    }
    parts.push_back(genfun_piece(p, arena));
  }
  if (parts.empty()) return Frf(arena);
  return rf_sum(std::move(parts));
}

std::string region_dump(const Region& region) {
  std::ostringstream os;
  for (const auto& p : region.pieces) {
    os << p.dim << "; ";
    for (std::size_t i = 0; i < p.quasigens.size(); ++i) {
      if (i > 0) os << " ";
      os << "(";
      for (std::size_t j = 0; j < p.quasigens[i].size(); ++j) {
        if (j > 0) os << ",";
        os << p.quasigens[i][j];
      }
      os << ")";
    }
    os << "; " << p.box_count.get_str() << "\n";
  }
  return os.str();
}

std::vector<IntVector> enumerate_region_points(const DiophantineMonoid& mon,
                                               const Support& A,
                                               const Support& C, int bound) {
  const int m = mon.m();
  std::vector<IntVector> out;
  IntVector x(m, 0);
  std::vector<bool> in_a(m + 1, false);
  std::vector<bool> in_c(m + 1, false);
  for (int a : A) in_a[a] = true;
  for (int c : C) in_c[c] = true;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == m) {
      for (const auto& row : mon.phi()) {
        long s = 0;
        for (int j = 0; j < m; ++j) s += row[j] * x[j];
        if (s != 0) return;
      }
      out.push_back(x);
      return;
    }
    const int lo = in_a[pos + 1] ? 1 : 0;
    const int hi = in_c[pos + 1] ? bound : 0;
    for (int v = lo; v <= hi; ++v) {
      x[pos] = v;
      rec(pos + 1);
    }
    x[pos] = 0;
  };
  rec(0);
  return out;
}

}  // namespace nilzeta
