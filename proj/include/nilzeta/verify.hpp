// Verification suites shared by the command-line tool and the acceptance
// binary. Each suite returns one Check per assertion with the exact values
// involved.

#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilzeta/zeta.hpp"

namespace nilzeta {

struct Check {
  enum class Status { pass, fail, skip };
  std::string name;
  Status status = Status::pass;
  std::string detail;

  bool ok() const { return status != Status::fail; }
};

std::string check_line(const Check& c);
bool all_ok(const std::vector<Check>& checks);

// Computes zeta functions once per (d, kind, word) and reuses them, through
// the on-disk cache when one is configured.
class ZetaProvider {
 public:
  ZetaProvider(ComputeOptions opts = {}, std::optional<ResultCache> cache = std::nullopt)
      : opts_(std::move(opts)), cache_(std::move(cache)) {}

  const ZetaResult& get(int d, ZetaKind kind, const std::string& word = "");
  const Rational& c(int d);

 private:
  ComputeOptions opts_;
  std::optional<ResultCache> cache_;
  // Deques keep references stable as entries are added.
  std::deque<ZetaResult> memo_;
  std::deque<std::pair<int, Rational>> c_memo_;
};

// Published closed forms: p-adic (d = 2, 3, and the d = 4 denominator),
// reduced (d <= 5), topological (d <= 4) and c_d (d <= 6).
std::vector<Check> verify_golden(int d, ZetaProvider& z);
// Functional equations of the p-adic, no-overlap and overlap zeta functions,
// agreement of the two no-overlap routes and of the overlap sum, and the
// ratio at s = 0.
std::vector<Check> verify_functional_equations(int d, ZetaProvider& z);
// Pole orders, residues, degree and limit at infinity.
std::vector<Check> verify_poles(int d, ZetaProvider& z);
// Series, partition-pair sum and brute-force counts for n = 0..order.
std::vector<Check> verify_oracle(int d, long p, int order);
// Reciprocity laws on the regions of f_{2,d} and on random small monoids.
std::vector<Check> verify_reciprocity(int d, int random_monoids = 50, unsigned seed = 1);
// Bijections and identities checked by bounded enumeration: regions against
// G_{I,sigma}, fibres of omega, H_{I,J} as a disjoint union, the two
// submodule-count formulas and the descent-set identity.
std::vector<Check> verify_bijections(int d, int bound = 6);

}  // namespace nilzeta
