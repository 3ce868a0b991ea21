#include "doctest.h"

#include <set>

#include "nilzeta/oracle.hpp"
#include "nilzeta/zeta.hpp"

using namespace nilzeta;

namespace {

// Sublattices of Z^n of index p^k. Each contains p^k Z^n, so they match the
// subgroups of index p^k in (Z/p^k)^n; those are found as closures of all
// generating sets of at most n elements. Independent of any HNF
// parameterization.
long brute_sublattice_count(int n, long p, int k) {
  long mod = 1;
  for (int i = 0; i < k; ++i) mod *= p;
  long size = 1;
  for (int i = 0; i < n; ++i) size *= mod;
  auto vec_of = [&](long code) {
    std::vector<long> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = code % mod;
      code /= mod;
    }
    return v;
  };
  auto code_of = [&](const std::vector<long>& v) {
    long code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * mod + ((v[i] % mod) + mod) % mod;
    return code;
  };
  std::set<std::vector<bool>> found;
  const long target = size / mod;
  std::vector<long> gens;
  std::function<void(long)> rec = [&](long start) {
    std::vector<bool> in(size, false);
    std::vector<long> elems{0};
    in[0] = true;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (long g : gens) {
        auto a = vec_of(elems[i]);
        auto b = vec_of(g);
        for (int c = 0; c < n; ++c) a[c] += b[c];
        long code = code_of(a);
        if (!in[code]) {
          in[code] = true;
          elems.push_back(code);
        }
      }
    }
    if (static_cast<long>(elems.size()) == target) found.insert(in);
    if (static_cast<long>(elems.size()) >= target || gens.size() == static_cast<std::size_t>(n)) return;
    for (long g = start; g < size; ++g) {
      if (in[g]) continue;
      gens.push_back(g);
      rec(g + 1);
      gens.pop_back();
    }
  };
  rec(1);
  return static_cast<long>(found.size());
}

}  // namespace

TEST_CASE("structure constants") {
  StructureConstants sc{3};
  CHECK(sc.rank() == 6);
  CHECK(sc.y_index(1, 2) == 3);
  CHECK(sc.y_index(1, 3) == 4);
  CHECK(sc.y_index(2, 3) == 5);
  std::vector<long> x1{1, 0, 0, 0, 0, 0}, x3{0, 0, 1, 0, 0, 0};
  CHECK(sc.bracket(x1, x3) == std::vector<long>{0, 0, 0, 0, 1, 0});
  CHECK(sc.bracket(x3, x1) == std::vector<long>{0, 0, 0, 0, -1, 0});
  // Brackets with central elements vanish; the bracket is alternating.
  std::vector<long> y{0, 0, 0, 1, 1, 1}, u{2, -1, 3, 5, 0, 7};
  CHECK(sc.bracket(u, y) == std::vector<long>(6, 0));
  CHECK(sc.bracket(u, u) == std::vector<long>(6, 0));
}

TEST_CASE("HNF candidate counts match a brute-force sublattice count") {
  // The number of sublattices of index p^k in Z^n.
  for (auto [n, p, k] : {std::tuple{2, 2L, 1}, std::tuple{2, 2L, 2}, std::tuple{3, 2L, 1},
                         std::tuple{2, 3L, 1}, std::tuple{3, 2L, 2}}) {
    CHECK(hnf_candidate_count(n, p, k) == brute_sublattice_count(n, p, k));
  }
  // Index p sublattices of Z^D correspond to hyperplanes of F_p^D.
  CHECK(hnf_candidate_count(6, 2, 1) == 63);
  CHECK(hnf_candidate_count(6, 5, 0) == 1);
}

TEST_CASE("count_subalgebras examples") {
  CHECK(count_subalgebras(2, 2, 0) == 1);
  CHECK(count_subalgebras(2, 2, 1) == 3);
  CHECK(count_subalgebras(2, 5, 0) == 1);
  auto series = rf_series_coeffs(zeta_padic(2).rational(), 3, 2);
  CHECK(Rational(count_subalgebras(2, 3, 2)) == series[2]);
  for (int d : {2, 3}) {
    for (long p : {2L, 3L}) {
      for (int n = 0; n <= 2; ++n) CHECK(count_subalgebras(d, p, n) >= 1);
    }
  }
  CHECK_THROWS_AS(count_subalgebras(2, 4, 1), DomainError);
  CHECK_THROWS_AS(count_subalgebras(1, 2, 1), DomainError);
  CHECK_THROWS_AS(count_subalgebras(2, 2, -1), DomainError);
}

TEST_CASE("guard refuses oversized enumerations") {
  CHECK(hnf_candidate_count(10, 2, 8) > kOracleCandidateLimit);
  try {
    (void)count_subalgebras(4, 2, 8);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.estimate == hnf_candidate_count(10, 2, 8));
  }
}

TEST_CASE("partition-pair series") {
  CHECK(gss_partial(2, 2, 1) == std::vector<Integer>{1, 3});
  CHECK(gss_partial(2, 2, 0) == std::vector<Integer>{1});
  CHECK(gss_partial(3, 2, 1)[1] == count_subalgebras(3, 2, 1));
  // Truncation is consistent.
  auto long_run = gss_partial(3, 3, 4);
  auto short_run = gss_partial(3, 3, 2);
  CHECK(std::vector<Integer>(long_run.begin(), long_run.begin() + 3) == short_run);
}

TEST_CASE("three routes agree") {
  for (auto [d, p, N] : {std::tuple{2, 2L, 4}, std::tuple{2, 3L, 3}, std::tuple{3, 2L, 3},
                         std::tuple{3, 3L, 2}}) {
    RouteComparison rc = compare_routes(d, p, N);
    CHECK(rc.agree());
    CHECK(rc.series.size() == static_cast<std::size_t>(N + 1));
    auto j = rc.to_json();
    CHECK(j["agree"] == true);
    CHECK(j["brute"].size() == static_cast<std::size_t>(N + 1));
  }
  RouteComparison rc = compare_routes(2, 2, 2);
  CHECK(rc.to_text().find("all routes agree") != std::string::npos);
  CHECK(rc.to_text().find("MISMATCH") == std::string::npos);
}
