// Partitions, permutations, Gaussian multinomials, submodule counts and the
// constrained permutation set S_{2d'}.

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nilzeta/arith.hpp"

namespace nilzeta {

// Weakly decreasing, nonnegative parts of a fixed length.
using Partition = std::vector<int>;
// One-line notation, values 1..n.
using Permutation = std::vector<int>;
// Sorted 1-based elements.
using Subset = std::vector<int>;
// Letters '0' and '1'.
using DyckWord = std::string;

enum class QVar { q, q_inverse };

inline int binom2(int d) { return d * (d - 1) / 2; }

// Polynomials in the single-variable arena q_arena().
LaurentPolynomial gaussian_binomial(int n, int k, QVar var = QVar::q);
LaurentPolynomial gaussian_multinomial(int n, const Subset& J,
                                       QVar var = QVar::q);

Subset descent_set(const Permutation& sigma);
Subset ascent_set(const Permutation& sigma);
int coxeter_length(const Permutation& sigma);
bool is_permutation(const Permutation& sigma);
std::string permutation_string(const Permutation& sigma);
Permutation parse_permutation(const std::string& text);
Permutation inverse_permutation(const Permutation& sigma);

bool is_partition(const Partition& lambda);
int partition_size(const Partition& lambda);
// Transpose; the result has `length` parts (default: the largest part).
Partition conjugate_partition(const Partition& lambda, int length = -1);
bool partition_leq(const Partition& mu, const Partition& lambda);
// All partitions with n parts, each part at most max_part.
std::vector<Partition> partitions_in_box(int n, int max_part);

// Number of submodules of type mu in a finite module of type lambda, as a
// polynomial in q; computed from conjugate partitions.
LaurentPolynomial alpha_count(const Partition& lambda, const Partition& mu);

struct LMProfile {
  std::vector<int> m;  // merged parts, length 2n, weakly decreasing
  std::vector<int> L;  // length 2n + 1, L[0] = 0
  std::vector<int> M;  // length 2n + 1, M[0] = 0
};

LMProfile lm_profile(const Partition& lambda, const Partition& mu);
// Same count as alpha_count, computed through the merged profile.
LaurentPolynomial alpha_alt(const Partition& lambda, const Partition& mu);

// Pairwise sums lambda_i + lambda_j (i < j), sorted descending.
Partition mu_of_lambda(const Partition& lambda);

// b: pairs (i, j) with i < j go to d' + 1..2d', singles j stay j.
int index_b_pair(int i, int j, int d);
int index_b_single(int j, int d);
// (0, k) for k <= d', otherwise the pair (i, j).
std::pair<int, int> index_b_inv(int k, int d);

// The tuple v_i of length d + d'.
std::vector<int> corresponding_tuple(int i, int d);

Permutation sigma_of_pair(const Partition& lambda, const Partition& nu);

bool in_script_S(const Permutation& sigma, int dprime);
// Depth-first generation with both membership conditions checked on
// prefixes. The visitor sees permutations in lexicographic order.
void for_each_script_S(int dprime,
                       const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_script_S(int dprime);

DyckWord dyck_of_sigma(const Permutation& sigma, int dprime);
bool is_dyck_word(const DyckWord& w);
std::vector<DyckWord> dyck_words(int dprime);
Subset j_set(const Permutation& sigma, int dprime);
// (L_j(sigma), M_j(sigma)) for j in 0..2d'.
std::pair<int, int> lm_sigma(const Permutation& sigma, int j, int dprime);

// All subsets of [n], in lexicographic order of their sorted elements.
std::vector<Subset> all_subsets(int n);
std::string subset_string(const Subset& s);

}  // namespace nilzeta
