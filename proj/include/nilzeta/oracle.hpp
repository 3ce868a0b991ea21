// Independent verification routes: brute-force subalgebra counts by
// sublattice enumeration, and the truncated partition-pair series.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "nilzeta/arith.hpp"

namespace nilzeta {

// The enumeration would visit more candidates than the oracle allows.
struct CapacityError : std::runtime_error {
  CapacityError(const std::string& what, Integer estimate)
      : std::runtime_error(what), estimate(std::move(estimate)) {}
  Integer estimate;
};

inline constexpr long kOracleCandidateLimit = 10'000'000;

// Bracket table of f_{2,d} on the basis x_1..x_d, y_(1,2), y_(1,3), ...,
// y_(d-1,d) (pairs in lexicographic order).
struct StructureConstants {
  int d = 0;
  int rank() const { return d + d * (d - 1) / 2; }
  // 0-based coordinate of y_(i,j), 1 <= i < j <= d.
  int y_index(int i, int j) const;
  // [u, v] for coordinate vectors u, v.
  std::vector<long> bracket(const std::vector<long>& u, const std::vector<long>& v) const;
};

// Number of upper-triangular Hermite normal forms of determinant p^n in
// dimension D.
Integer hnf_candidate_count(int D, long p, int n);

// Sublattices of index p^n in Z^D that are closed under the bracket.
Integer count_subalgebras(int d, long p, int n);

// Coefficients of t^0..t^N of the partition-pair series at q = p.
std::vector<Integer> gss_partial(int d, long p, int N);

struct RouteComparison {
  int d = 0;
  long p = 0;
  int N = 0;
  std::vector<Integer> series;
  std::vector<Integer> gss;
  std::vector<Integer> brute;
  std::optional<int> first_mismatch;

  bool agree() const { return !first_mismatch.has_value(); }
  std::string to_text() const;
  nlohmann::json to_json() const;
};

// Series coefficients of the p-adic zeta function against gss_partial and
// count_subalgebras for n = 0..N.
RouteComparison compare_routes(int d, long p, int N);

}  // namespace nilzeta
