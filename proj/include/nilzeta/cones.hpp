// Monoids E = {x in N_0^m : Phi x = 0}: extreme rays, triangulations,
// fundamental parallelepipeds and generating functions of the regions
// I_{E,A,C} = {x in E : A subset supp(x) subset C}.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilzeta/arith.hpp"

namespace nilzeta {

using IntVector = std::vector<long>;
using IntMatrix = std::vector<IntVector>;
// Sorted 1-based coordinate indices.
using Support = std::vector<int>;

// ---------------------------------------------------------------------------
// Exact linear feasibility over x >= 0.

struct LinearConstraint {
  enum class Rel { ge, eq, le };
  std::vector<Rational> coeffs;
  Rel rel = Rel::ge;
  Rational rhs = 0;
};

// Phase-one simplex with Bland's rule; returns a feasible point or nothing.
std::optional<std::vector<Rational>> lp_find_point(
    int nvars, const std::vector<LinearConstraint>& constraints);
bool lp_feasible(int nvars, const std::vector<LinearConstraint>& constraints);

// ---------------------------------------------------------------------------
// Integer linear algebra helpers.

// Rank over the rationals.
int matrix_rank(const IntMatrix& rows);
// Basis of {x : A x = 0} with primitive integer vectors.
IntMatrix kernel_basis(const IntMatrix& a, int ncols);
IntVector primitive(const IntVector& v);

struct SmithForm {
  std::vector<Integer> diagonal;          // s_1 | s_2 | ... (length k)
  std::vector<std::vector<Integer>> V;    // k x k, unimodular, G V = U^-1 S
};
// Smith normal form of the m x k matrix whose columns are `columns`.
SmithForm smith_form(const IntMatrix& columns, std::size_t m);

// ---------------------------------------------------------------------------

class DiophantineMonoid {
 public:
  // Dependent rows of phi are dropped. `slack` lists 1-based columns that
  // were introduced as slack variables.
  DiophantineMonoid(IntMatrix phi, int m, Support slack = {});

  const IntMatrix& phi() const { return phi_; }
  int m() const { return m_; }
  const Support& slack_range() const { return slack_; }
  // Dimension of the solution cone (m - rank when the cone is full in the
  // kernel; computed from the rays).
  int dim() const;

 private:
  IntMatrix phi_;
  int m_;
  Support slack_;
};

struct RaySet {
  std::vector<IntVector> rays;
};

// Primitive generators of the extreme rays of {x >= 0 : Phi x = 0}, by the
// double description method.
RaySet extreme_rays(const DiophantineMonoid& mon);
Support support_of(const IntVector& v);
std::vector<Support> minimal_supports(const RaySet& rays);
std::vector<Support> minimal_supports(const DiophantineMonoid& mon);
// B in L(E): some x in E has support exactly B.
bool is_face_support(const DiophantineMonoid& mon, const Support& B);

// Placing triangulation of the cone spanned by `rays`, visiting rays in
// `order` (indices into rays; default 0..n-1). Returns maximal simplices as
// sorted lists of ray indices.
std::vector<std::vector<int>> triangulate(const std::vector<IntVector>& rays,
                                          const std::vector<int>& order = {});

struct SimplicialPiece {
  std::vector<IntVector> quasigens;
  std::vector<IntVector> box_points;  // empty when points were not requested
  Integer box_count;                  // |D| = lattice index
  int dim = 0;
};

// Integer points sum a_i g_i with a_i in (0, 1].
std::vector<IntVector> box_points(const std::vector<IntVector>& quasigens,
                                  std::size_t m);
Integer box_count(const std::vector<IntVector>& quasigens, std::size_t m);

struct Region {
  DiophantineMonoid monoid;
  Support A;
  Support C;
  std::vector<SimplicialPiece> pieces;
};

struct DecomposeOptions {
  bool with_points = true;      // enumerate box points, not just count them
  bool max_dim_only = false;    // keep only pieces of dimension dim(E)
  std::vector<int> ray_order;   // placing order, indices into the ray set
};

Region decompose_region(const DiophantineMonoid& mon, const Support& A,
                        const Support& C, const DecomposeOptions& opts = {});
// Same, reusing a precomputed ray set of the monoid.
Region decompose_region(const DiophantineMonoid& mon, const RaySet& rays,
                        const Support& A, const Support& C,
                        const DecomposeOptions& opts = {});

// Sum over pieces of (sum of Z^box) / prod (1 - Z^quasigen) in z_arena(m).
Frf genfun_region(const Region& region);
Frf genfun_piece(const SimplicialPiece& piece, const ArenaPtr& arena);

// One line per piece: "dim; quasigens; #box_points".
std::string region_dump(const Region& region);

// Points of I_{E,A,C} with all coordinates at most `bound`.
std::vector<IntVector> enumerate_region_points(const DiophantineMonoid& mon,
                                               const Support& A,
                                               const Support& C, int bound);

}  // namespace nilzeta
