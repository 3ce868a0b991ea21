// Finite-sum assembly of the subalgebra zeta functions of the free
// class-2-nilpotent Lie rings f_{2,d}: the index set W_d, the monoids
// E_sigma and E_no, Gaussian multinomial weights, numerical data maps and
// the p-adic, overlap, no-overlap, reduced and topological zeta functions.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "nilzeta/arith.hpp"
#include "nilzeta/combinat.hpp"
#include "nilzeta/cones.hpp"

namespace nilzeta {

// D = d + d', the rank of f_{2,d}.
int rank_D(int d);

struct WPair {
  Subset I;
  Permutation sigma;

  bool operator==(const WPair& o) const { return I == o.I && sigma == o.sigma; }
};

// ---------------------------------------------------------------------------
// The monoid E_sigma.

// R_sigma in ascending order.
Subset r_set(const Permutation& sigma, int d);
// Row for i in R_sigma carries -1 in slack column d + d' + (rank of i).
IntMatrix phi_sigma(const Permutation& sigma, int d);
DiophantineMonoid monoid_of_sigma(const Permutation& sigma, int d);
// 1-based slack column attached to the row of i in R_sigma.
int slack_column(const Permutation& sigma, int d, int i);

// Feasibility of the system on r_1..r_d together with nonemptiness of
// G_{I,sigma}; pairs failing only the latter would contribute nothing.
bool wd_contains(const Subset& I, const Permutation& sigma, int d);
// I in lexicographic order, then sigma in lexicographic order.
std::vector<WPair> enumerate_Wd(int d);

Support a_set(const WPair& wp, int d);
Support c_set(const WPair& wp, int d);
Region region_of_wpair(const WPair& wp, int d,
                       const DecomposeOptions& opts = {});

LaurentPolynomial gmc(const WPair& wp, int d);
Integer mc(const WPair& wp, int d);

// ---------------------------------------------------------------------------
// The monoid E_no and the regions H_{I,J}.

DiophantineMonoid monoid_no_overlap(int d);
Support a_set_ij(const Subset& I, const Subset& J, int d);
Support c_set_ij(const Subset& I, const Subset& J, int d);
// Placing order that yields the simplicial cone C_0 as a maximal cell.
std::vector<int> special_ray_order(const RaySet& rays, int d);
Region region_of_ij(const Subset& I, const Subset& J, int d,
                    const DecomposeOptions& opts = {});
// H_{I,J}(X, Y): the region generating function with the slack set to 1,
// in xyz_arena(d, d', 0).
Frf h_genfun(const Subset& I, const Subset& J, int d);

// ---------------------------------------------------------------------------
// Numerical data maps.

struct NumericalDataMap {
  enum class Kind { sigma, no_overlap, reduced };
  Kind kind = Kind::sigma;
  ArenaPtr target;               // qt_arena() or t_arena()
  std::vector<Exponent> images;  // X_1..X_d, then Y_1..Y_{d'}

  // Images for a column vector with `slack` trailing slack coordinates.
  std::vector<Exponent> with_slack(int slack) const;
  // Exponent of the image of Z^alpha.
  Exponent apply(const IntVector& alpha) const;
};

NumericalDataMap numerical_map(const Permutation& sigma, int d);
NumericalDataMap numerical_map_no_overlap(int d);
NumericalDataMap numerical_map_reduced(int d);

// ---------------------------------------------------------------------------
// Zeta functions.

enum class ZetaKind { padic, overlap, no_overlap, reduced, topological };
enum class NoOverlapRoute { via_H, via_G };

std::string kind_name(ZetaKind kind);
std::optional<ZetaKind> parse_kind(const std::string& name);

struct Provenance {
  double seconds = 0;
  long pairs = 0;
  long pieces = 0;
  std::string route;
};

struct ZetaResult {
  int d = 0;
  ZetaKind kind = ZetaKind::padic;
  std::string word;  // overlap word, empty otherwise
  std::variant<Frf, Lff> value = Lff();
  Provenance provenance;

  const Frf& rational() const { return std::get<Frf>(value); }
  const Lff& topological() const { return std::get<Lff>(value); }
};

struct ComputeOptions {
  int threads = 1;
  // Called after every finished summand with (done, total); serialized.
  std::function<void(long, long)> progress;
};

ZetaResult zeta_padic(int d, const ComputeOptions& opts = {});
ZetaResult zeta_overlap(int d, const DyckWord& w,
                        const ComputeOptions& opts = {});
ZetaResult zeta_no_overlap(int d, NoOverlapRoute route,
                           const ComputeOptions& opts = {});
ZetaResult zeta_reduced(int d, const ComputeOptions& opts = {});
ZetaResult zeta_topological(int d, const ComputeOptions& opts = {});
Rational c_constant(int d, const ComputeOptions& opts = {});

// GMC_{I,sigma} * chi_sigma(G_{I,sigma}) for one pair, in qt_arena().
Frf padic_summand(const WPair& wp, int d);

// ---------------------------------------------------------------------------
// Checks.

struct PoleReport {
  int reduced_order_at_1 = 0;
  Rational reduced_residue_at_1;  // lim (t-1)^order zeta_red
  int top_degree = 0;
  int top_pole_order_at_0 = 0;
  Rational top_residue_at_0;      // lim s * zeta_top, when the pole is simple
  Rational top_limit_at_infinity; // lim s^D zeta_top(s) as s -> infinity
  Rational c_d;
  bool functional_equation_holds = false;
};

// Order and leading coefficient of f at t = 1: f ~ value * (t - 1)^(-order).
std::pair<int, Rational> pole_at_one(const Frf& reduced);
// Order and leading coefficient at s = 0: f ~ value * s^(-order).
std::pair<int, Rational> pole_at_zero(const Lff& top);

PoleReport pole_report(int d, const ZetaResult& reduced,
                       const ZetaResult& topological, const Rational& c_d,
                       const std::optional<ZetaResult>& padic = std::nullopt);

// f(q^-1, t^-1) = (-1)^D q^binom(D,2) t^D f(q, t).
bool check_functional_equation(const Frf& f, int D);
// zeta(q, t) * prod_{i<D} (1 - q^i t) at t = 1, as a function of q.
Frf ratio_at_s_zero(const Frf& f, int D);

nlohmann::json zeta_to_json(const ZetaResult& r);
ZetaResult zeta_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Result cache keyed by (d, kind, word, format version).

inline constexpr int kCacheFormatVersion = 1;

class ResultCache {
 public:
  // Empty dir: NILZETA_CACHE if set, otherwise ./.nilzeta-cache.
  explicit ResultCache(std::string dir = "");

  const std::string& dir() const { return dir_; }
  std::string key(int d, ZetaKind kind, const std::string& word) const;
  // Returns a cached value only when it passes revalidation.
  std::optional<ZetaResult> load(int d, ZetaKind kind,
                                 const std::string& word) const;
  void store(const ZetaResult& r) const;

 private:
  std::string dir_;
};

}  // namespace nilzeta
