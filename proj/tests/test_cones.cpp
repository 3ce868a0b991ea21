#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "nilzeta/cones.hpp"

using namespace nilzeta;

namespace {

using P = LaurentPolynomial;

IntMatrix phi_no_d2() { return {{1, 2, -1, -1}}; }
IntMatrix phi_no_d3() { return {{0, 1, 2, -1, -1, -1, -1}}; }

Support full_support(int m) {
  Support s(m);
  for (int i = 0; i < m; ++i) s[i] = i + 1;
  return s;
}

std::vector<Support> all_subsets_of(const Support& c) {
  std::vector<Support> out;
  for (unsigned mask = 0; mask < (1u << c.size()); ++mask) {
    Support s;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (mask >> i & 1) s.push_back(c[i]);
    }
    out.push_back(s);
  }
  return out;
}

Support set_minus(const Support& a, const Support& b) {
  Support out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

IntVector phi_times(const IntMatrix& phi, const IntVector& x) {
  IntVector out;
  for (const auto& row : phi) {
    long s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
    out.push_back(s);
  }
  return out;
}

// True when E has a point with every coordinate positive.
bool has_positive_point(const IntMatrix& phi, int m) {
  std::vector<LinearConstraint> cs;
  for (const auto& row : phi) {
    LinearConstraint c;
    for (long x : row) c.coeffs.push_back(x);
    c.rel = LinearConstraint::Rel::eq;
    cs.push_back(c);
  }
  for (int i = 0; i < m; ++i) {
    LinearConstraint c;
    c.coeffs.assign(m, 0);
    c.coeffs[i] = 1;
    c.rhs = 1;
    cs.push_back(c);
  }
  return lp_feasible(m, cs);
}

// Random small Phi with 1 or 2 rows whose monoid contains a positive point.
IntMatrix random_full_phi(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> rows(1, 2);
  for (;;) {
    IntMatrix phi(rows(rng), IntVector(m));
    for (auto& row : phi) {
      for (auto& x : row) x = entry(rng);
    }
    if (matrix_rank(phi) == 0) continue;
    if (has_positive_point(phi, m)) return phi;
  }
}

// All interior points of the pieces with coordinates at most `bound`,
// counted with multiplicity.
std::map<IntVector, int> piece_points(const Region& region, int bound) {
  std::map<IntVector, int> out;
  const std::size_t m = region.monoid.m();
  for (const auto& piece : region.pieces) {
    const auto& g = piece.quasigens;
    for (const auto& b : piece.box_points) {
      // Add nonnegative multiples of the quasigenerators while in bounds.
      std::vector<IntVector> frontier{b};
      std::set<IntVector> local{b};
      while (!frontier.empty()) {
        IntVector x = frontier.back();
        frontier.pop_back();
        for (const auto& v : g) {
          IntVector y = x;
          bool ok = true;
          for (std::size_t i = 0; i < m; ++i) {
            y[i] += v[i];
            if (y[i] > bound) ok = false;
          }
          if (ok && local.insert(y).second) frontier.push_back(y);
        }
      }
      for (const auto& x : local) {
        if (std::all_of(x.begin(), x.end(), [&](long c) { return c <= bound; }))
          out[x]++;
      }
    }
  }
  return out;
}

void check_region_against_enumeration(const DiophantineMonoid& mon,
                                      const Support& A, const Support& C,
                                      int bound) {
  Region r = decompose_region(mon, A, C);
  auto from_pieces = piece_points(r, bound);
  auto brute = enumerate_region_points(mon, A, C, bound);
  std::map<IntVector, int> expected;
  for (const auto& x : brute) expected[x]++;
  CHECK(from_pieces == expected);
}

// Maps every Z_i to t, so the series coefficient of t^n counts region
// points of total degree n.
std::vector<Rational> degree_series(const Frf& f, int order) {
  std::vector<Exponent> images(f.arena()->size(), Exponent{0, 1});
  return rf_series_coeffs(rf_substitute(f, images, qt_arena()), 2, order);
}

int dim_of(const RaySet& rays, const Support& C) {
  IntMatrix face;
  for (const auto& r : rays.rays) {
    auto s = support_of(r);
    if (std::includes(C.begin(), C.end(), s.begin(), s.end())) face.push_back(r);
  }
  return face.empty() ? 0 : matrix_rank(face);
}

}  // namespace

TEST_CASE("extreme_rays examples") {
  DiophantineMonoid eno(phi_no_d2(), 4);
  auto rays = extreme_rays(eno).rays;
  std::set<IntVector> got(rays.begin(), rays.end());
  CHECK(got == std::set<IntVector>{{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 2, 0}, {0, 1, 0, 2}});
  DiophantineMonoid diag({{1, -1}}, 2);
  CHECK(extreme_rays(diag).rays == std::vector<IntVector>{{1, 1}});
  DiophantineMonoid trivial({{1, 1}}, 2);
  CHECK(extreme_rays(trivial).rays.empty());
}

TEST_CASE("rays are primitive, pairwise distinct solutions") {
  std::mt19937 rng(31);
  for (int t = 0; t < 40; ++t) {
    const int m = 3 + t % 3;
    IntMatrix phi = random_full_phi(rng, m);
    DiophantineMonoid mon(phi, m);
    auto rays = extreme_rays(mon).rays;
    std::set<IntVector> distinct(rays.begin(), rays.end());
    CHECK(distinct.size() == rays.size());
    for (const auto& r : rays) {
      CHECK(phi_times(phi, r) == IntVector(phi.size(), 0));
      CHECK(primitive(r) == r);
      CHECK(std::all_of(r.begin(), r.end(), [](long x) { return x >= 0; }));
    }
  }
}

TEST_CASE("minimal_supports") {
  DiophantineMonoid eno(phi_no_d3(), 7);
  auto ms = minimal_supports(eno);
  std::set<Support> got(ms.begin(), ms.end());
  std::set<Support> want{{1}};
  for (int i = 4; i <= 7; ++i) {
    want.insert({2, i});
    want.insert({3, i});
  }
  CHECK(got == want);
  CHECK(minimal_supports(DiophantineMonoid({{1, -1}}, 2)) ==
        std::vector<Support>{{1, 2}});
  std::mt19937 rng(37);
  for (int t = 0; t < 30; ++t) {
    const int m = 3 + t % 3;
    DiophantineMonoid mon(random_full_phi(rng, m), m);
    std::set<int> all;
    for (const auto& s : minimal_supports(mon)) all.insert(s.begin(), s.end());
    CHECK(all.size() == static_cast<std::size_t>(m));
  }
}

TEST_CASE("is_face_support") {
  DiophantineMonoid eno(phi_no_d2(), 4);
  CHECK(is_face_support(eno, {}));
  CHECK(is_face_support(eno, {2, 3, 4}));
  CHECK(is_face_support(eno, {1, 2, 3, 4}));
  CHECK_FALSE(is_face_support(eno, {2}));
  CHECK_FALSE(is_face_support(eno, {1, 2}));
}

TEST_CASE("box_points examples") {
  auto pts = box_points({{0, 1, 2, 0}, {0, 1, 0, 2}}, 4);
  CHECK(pts == std::vector<IntVector>{{0, 1, 1, 1}, {0, 2, 2, 2}});
  CHECK(box_count({{0, 1, 2, 0}, {0, 1, 0, 2}}, 4) == 2);
  CHECK(box_points({{1, 0, 0}, {0, 0, 1}}, 3) == std::vector<IntVector>{{1, 0, 1}});
  CHECK(box_points({}, 3) == std::vector<IntVector>{{0, 0, 0}});
  CHECK_THROWS_AS(box_points({{1, 2}, {2, 4}}, 2), DomainError);
}

TEST_CASE("box_points agree with a bounded scan and are order independent") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> entry(0, 3);
  int tested = 0;
  while (tested < 40) {
    const int k = 2 + tested % 2;
    std::vector<IntVector> g(k, IntVector(3));
    for (auto& v : g) {
      for (auto& x : v) x = entry(rng);
    }
    if (matrix_rank(g) != k) continue;
    ++tested;
    // Every box point has coefficients in (1/N) Z, N the lattice index.
    const long N = box_count(g, 3).get_si();
    std::set<IntVector> scan;
    std::vector<long> num(k, 1);
    {
      const long den = N;
      std::function<void(int)> rec = [&](int i) {
        if (i == k) {
          std::vector<Rational> pt(3, 0);
          for (int j = 0; j < k; ++j) {
            for (int c = 0; c < 3; ++c) pt[c] += Rational(num[j], den) * g[j][c];
          }
          IntVector v;
          for (auto& c : pt) {
            c.canonicalize();
            if (c.get_den() != 1) return;
            v.push_back(c.get_num().get_si());
          }
          scan.insert(v);
          return;
        }
        for (long a = 1; a <= den; ++a) {
          num[i] = a;
          rec(i + 1);
        }
      };
      rec(0);
    }
    auto pts = box_points(g, 3);
    CHECK(std::set<IntVector>(pts.begin(), pts.end()) == scan);
    CHECK(static_cast<long>(pts.size()) == N);
    std::reverse(g.begin(), g.end());
    auto rev = box_points(g, 3);
    CHECK(std::set<IntVector>(rev.begin(), rev.end()) == scan);
  }
}

TEST_CASE("decompose_region examples") {
  DiophantineMonoid eno(phi_no_d2(), 4);
  Region r = decompose_region(eno, {}, {2, 3, 4});
  CHECK(region_dump(r) ==
        "0; ; 1\n"
        "1; (0,1,0,2); 1\n"
        "1; (0,1,2,0); 1\n"
        "2; (0,1,0,2) (0,1,2,0); 2\n");
  Region zero = decompose_region(eno, {}, {});
  REQUIRE(zero.pieces.size() == 1);
  CHECK(zero.pieces[0].dim == 0);
  CHECK(rf_equal(genfun_region(zero), Frf(P::constant(z_arena(4), 1))));
  Region none = decompose_region(eno, {2}, {2});
  CHECK(none.pieces.empty());
  CHECK(genfun_region(none).is_zero());
  CHECK_THROWS_AS(decompose_region(eno, {1}, {2}), DomainError);
}

TEST_CASE("genfun of the two-dimensional piece") {
  DiophantineMonoid eno(phi_no_d2(), 4);
  Region r = decompose_region(eno, {}, {2, 3, 4});
  const auto& k3 = r.pieces.back();
  REQUIRE(k3.dim == 2);
  ArenaPtr z = z_arena(4);
  Frf got = genfun_piece(k3, z);
  Frf want(P(z, {{Exponent{0, 1, 1, 1}, 1}, {Exponent{0, 2, 2, 2}, 1}}),
           {{Exponent{0, 1, 2, 0}, 1}, {Exponent{0, 1, 0, 2}, 1}});
  CHECK(rf_equal(got, want));
}

TEST_CASE("region pieces partition the region points") {
  DiophantineMonoid eno(phi_no_d2(), 4);
  for (const auto& C : std::vector<Support>{{}, {2, 3, 4}, {1, 2, 3, 4}, {1, 3}}) {
    for (const auto& A : all_subsets_of(C)) {
      check_region_against_enumeration(eno, A, C, 6);
    }
  }
  std::mt19937 rng(43);
  for (int t = 0; t < 20; ++t) {
    const int m = 3 + t % 2;
    IntMatrix phi = random_full_phi(rng, m);
    DiophantineMonoid mon(phi, m);
    Support C = full_support(m);
    for (const auto& A : minimal_supports(mon)) {
      check_region_against_enumeration(mon, A, C, 5);
    }
    check_region_against_enumeration(mon, {}, C, 5);
  }
}

TEST_CASE("series coefficients count region points by total degree") {
  std::mt19937 rng(47);
  for (int t = 0; t < 15; ++t) {
    const int m = 3 + t % 2;
    DiophantineMonoid mon(random_full_phi(rng, m), m);
    Support C = full_support(m);
    for (const Support& A : std::vector<Support>{{}, C}) {
      Region r = decompose_region(mon, A, C);
      auto series = degree_series(genfun_region(r), 8);
      std::vector<Rational> brute(9, 0);
      for (const auto& x : enumerate_region_points(mon, A, C, 8)) {
        long deg = 0;
        for (long c : x) deg += c;
        if (deg <= 8) brute[deg] += 1;
      }
      CHECK(series == brute);
    }
  }
}

TEST_CASE("quasigenerators are extreme rays of the ambient monoid") {
  std::mt19937 rng(53);
  for (int t = 0; t < 20; ++t) {
    const int m = 3 + t % 3;
    DiophantineMonoid mon(random_full_phi(rng, m), m);
    auto rays = extreme_rays(mon).rays;
    std::set<IntVector> rs(rays.begin(), rays.end());
    Region r = decompose_region(mon, {}, full_support(m));
    for (const auto& piece : r.pieces) {
      for (const auto& g : piece.quasigens) CHECK(rs.count(g) == 1);
      CHECK(piece.box_points.size() >= 1);
      CHECK(Integer(static_cast<long>(piece.box_points.size())) == piece.box_count);
    }
  }
}

TEST_CASE("Stanley reciprocity and face reciprocity") {
  std::mt19937 rng(59);
  for (int t = 0; t < 25; ++t) {
    const int m = 3 + t % 3;
    DiophantineMonoid mon(random_full_phi(rng, m), m);
    RaySet rays = extreme_rays(mon);
    Support full = full_support(m);
    const int dim = mon.dim();
    Frf closed = genfun_region(decompose_region(mon, {}, full));
    Frf open = genfun_region(decompose_region(mon, full, full));
    Frf sign_closed = dim % 2 ? rf_scale(closed, P::constant(closed.arena(), -1)) : closed;
    CHECK(rf_equal(rf_invert_variables(open), sign_closed));
    // Every minimal support, and every union of two, that is a face support.
    auto ms = minimal_supports(rays);
    std::vector<Support> faces(ms.begin(), ms.end());
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        Support u;
        std::set_union(ms[i].begin(), ms[i].end(), ms[j].begin(), ms[j].end(),
                       std::back_inserter(u));
        faces.push_back(u);
      }
    }
    for (const auto& A : faces) {
      if (!is_face_support(mon, A)) continue;
      const int fdim = dim_of(rays, A);
      Frf f = genfun_region(decompose_region(mon, {}, A));
      Frf fbar = genfun_region(decompose_region(mon, A, A));
      Frf signed_f = fdim % 2 ? rf_scale(f, P::constant(f.arena(), -1)) : f;
      CHECK(rf_equal(rf_invert_variables(fbar), signed_f));
    }
  }
}

TEST_CASE("inversion of variables exchanges A and C minus A") {
  std::mt19937 rng(61);
  for (int t = 0; t < 25; ++t) {
    const int m = 3 + t % 3;
    DiophantineMonoid mon(random_full_phi(rng, m), m);
    RaySet rays = extreme_rays(mon);
    Support C = full_support(m);
    const int dim = dim_of(rays, C);
    for (const auto& A : minimal_supports(rays)) {
      Support rest = set_minus(C, A);
      if (!is_face_support(mon, rest)) continue;
      Frf lhs = rf_invert_variables(genfun_region(decompose_region(mon, A, C)));
      Frf rhs = genfun_region(decompose_region(mon, rest, C));
      if (dim % 2) rhs = rf_scale(rhs, P::constant(rhs.arena(), -1));
      CHECK(rf_equal(lhs, rhs));
    }
  }
}

TEST_CASE("triangulation honours an explicit placing order") {
  // Square cone over four rays: both diagonals are possible depending on
  // which ray is placed last.
  std::vector<IntVector> rays{{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 2, 0}, {0, 1, 0, 2}};
  auto t1 = triangulate(rays, {0, 1, 2, 3});
  auto t2 = triangulate(rays, {2, 3, 0, 1});
  CHECK(t1.size() == 2);
  CHECK(t2.size() == 2);
  for (const auto& tri : {t1, t2}) {
    for (const auto& s : tri) CHECK(matrix_rank({rays[s[0]], rays[s[1]], rays[s[2]]}) == 3);
  }
  CHECK(triangulate({}, {}) == std::vector<std::vector<int>>{{}});
  CHECK_THROWS_AS(triangulate(rays, {0, 1, 2}), StructuralError);
}

TEST_CASE("lp_find_point") {
  // x + y = 2, x - y >= 1, x, y >= 0.
  std::vector<LinearConstraint> cs{
      {{1, 1}, LinearConstraint::Rel::eq, 2},
      {{1, -1}, LinearConstraint::Rel::ge, 1},
  };
  auto pt = lp_find_point(2, cs);
  REQUIRE(pt);
  CHECK((*pt)[0] + (*pt)[1] == 2);
  CHECK((*pt)[0] - (*pt)[1] >= 1);
  cs.push_back({{0, 1}, LinearConstraint::Rel::ge, 1});
  CHECK_FALSE(lp_feasible(2, cs));
}

TEST_CASE("smith_form and kernel_basis") {
  auto k = kernel_basis({{1, 2, -1, -1}}, 4);
  CHECK(k.size() == 3);
  for (const auto& v : k) CHECK(phi_times({{1, 2, -1, -1}}, v) == IntVector{0});
  auto sf = smith_form({{0, 1, 2, 0}, {0, 1, 0, 2}}, 4);
  Integer prod = 1;
  for (const auto& s : sf.diagonal) prod *= s;
  CHECK(prod == 2);
}
