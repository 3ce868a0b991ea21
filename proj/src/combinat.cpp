#include "nilzeta/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nilzeta {

namespace {

LaurentPolynomial from_coeffs(const std::vector<Integer>& c, QVar var) {
  std::vector<LaurentPolynomial::Term> terms;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    int e = static_cast<int>(k);
    terms.emplace_back(Exponent{var == QVar::q ? e : -e}, Rational(c[k]));
  }
  return LaurentPolynomial(q_arena(), std::move(terms));
}

LaurentPolynomial q_power(int e) {
  return LaurentPolynomial::monomial(q_arena(), Exponent{e});
}

}  // namespace

LaurentPolynomial gaussian_binomial(int n, int k, QVar var) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("gaussian_binomial needs 0 <= k <= n");
  }
  // Row-by-row recurrence [n, k] = [n-1, k-1] + q^k [n-1, k].
  std::vector<std::vector<Integer>> row(k + 1);
  row[0] = {1};
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      std::vector<Integer> next(j * (m - j) + 1, Integer(0));
      const auto& a = row[j - 1];
      for (std::size_t x = 0; x < a.size(); ++x) next[x] += a[x];
      if (j <= m - 1) {
        const auto& b = row[j];
        for (std::size_t x = 0; x < b.size(); ++x) next[x + j] += b[x];
      }
      row[j] = std::move(next);
    }
  }
  return from_coeffs(row[k], var);
}

LaurentPolynomial gaussian_multinomial(int n, const Subset& J, QVar var) {
  int prev = 0;
  LaurentPolynomial result = LaurentPolynomial::constant(q_arena(), 1);
  for (int j : J) {
    if (j <= prev || j >= n) {
      throw DomainError("gaussian_multinomial needs a sorted subset of [n-1]");
    }
    // [n]! / ([j_1]! [j_2 - j_1]! ...) telescoped as binomials.
    result = result * gaussian_binomial(n - prev, j - prev, var);
    prev = j;
  }
  return result;
}

Subset descent_set(const Permutation& sigma) {
  Subset out;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    if (sigma[i] > sigma[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

Subset ascent_set(const Permutation& sigma) {
  Subset out;
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
    if (sigma[i] < sigma[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int coxeter_length(const Permutation& sigma) {
  int inv = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      if (sigma[i] > sigma[j]) ++inv;
    }
  }
  return inv;
}

bool is_permutation(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size() + 1, false);
  for (int x : sigma) {
    if (x < 1 || x > static_cast<int>(sigma.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::string permutation_string(const Permutation& sigma) {
  std::string out;
  const bool wide = sigma.size() > 9;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (wide && i > 0) out += ",";
    out += std::to_string(sigma[i]);
  }
  return out;
}

Permutation parse_permutation(const std::string& text) {
  Permutation sigma;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) sigma.push_back(std::stoi(item));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw DomainError("bad permutation: " + text);
      sigma.push_back(c - '0');
    }
  }
  if (!is_permutation(sigma)) throw DomainError("not a permutation: " + text);
  return sigma;
}

Permutation inverse_permutation(const Permutation& sigma) {
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    inv[sigma[i] - 1] = static_cast<int>(i) + 1;
  }
  return inv;
}

bool is_partition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) return false;
    if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1]) return false;
  }
  return true;
}

int partition_size(const Partition& lambda) {
  return std::accumulate(lambda.begin(), lambda.end(), 0);
}

Partition conjugate_partition(const Partition& lambda, int length) {
  if (!is_partition(lambda)) throw DomainError("not a partition");
  int top = lambda.empty() ? 0 : lambda.front();
  if (length < 0) length = top;
  Partition out(length, 0);
  for (int k = 1; k <= length; ++k) {
    out[k - 1] = static_cast<int>(std::count_if(
        lambda.begin(), lambda.end(), [k](int x) { return x >= k; }));
  }
  return out;
}

bool partition_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

std::vector<Partition> partitions_in_box(int n, int max_part) {
  std::vector<Partition> out;
  Partition cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int bound) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, max_part);
  return out;
}

LaurentPolynomial alpha_count(const Partition& lambda, const Partition& mu) {
  if (!is_partition(lambda) || !is_partition(mu) ||
      !partition_leq(mu, lambda)) {
    throw DomainError("alpha_count needs partitions mu <= lambda");
  }
  const int top = lambda.empty() ? 0 : lambda.front();
  Partition lc = conjugate_partition(lambda, top + 1);
  Partition mc = conjugate_partition(mu, top + 1);
  LaurentPolynomial result = LaurentPolynomial::constant(q_arena(), 1);
  for (int k = 1; k <= top; ++k) {
    const int l = lc[k - 1];
    const int m = mc[k - 1];
    const int m_next = mc[k];
    result = result * q_power(m * (l - m)) *
             gaussian_binomial(l - m_next, m - m_next, QVar::q_inverse);
  }
  return result;
}

LMProfile lm_profile(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw DomainError("lm_profile needs partitions of equal length");
  }
  LMProfile p;
  p.m = lambda;
  p.m.insert(p.m.end(), mu.begin(), mu.end());
  std::sort(p.m.begin(), p.m.end(), std::greater<>());
  p.L.assign(p.m.size() + 1, 0);
  p.M.assign(p.m.size() + 1, 0);
  for (std::size_t j = 1; j <= p.m.size(); ++j) {
    const int mj = p.m[j - 1];
    p.L[j] = static_cast<int>(std::count_if(
        lambda.begin(), lambda.end(), [mj](int x) { return x >= mj; }));
    p.M[j] = static_cast<int>(
        std::count_if(mu.begin(), mu.end(), [mj](int x) { return x >= mj; }));
  }
  return p;
}

LaurentPolynomial alpha_alt(const Partition& lambda, const Partition& mu) {
  if (!is_partition(lambda) || !is_partition(mu) ||
      !partition_leq(mu, lambda)) {
    throw DomainError("alpha_alt needs partitions mu <= lambda");
  }
  LMProfile p = lm_profile(lambda, mu);
  const int len = static_cast<int>(p.m.size());
  LaurentPolynomial result = LaurentPolynomial::constant(q_arena(), 1);
  for (int j = 1; j <= len; ++j) {
    const int m_next = j < len ? p.m[j] : 0;
    result = result *
             gaussian_binomial(p.L[j] - p.M[j - 1], p.M[j] - p.M[j - 1],
                               QVar::q_inverse) *
             q_power(p.M[j] * (p.L[j] - p.M[j]) * (p.m[j - 1] - m_next));
  }
  return result;
}

Partition mu_of_lambda(const Partition& lambda) {
  Partition mu;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      mu.push_back(lambda[i] + lambda[j]);
    }
  }
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return mu;
}

int index_b_pair(int i, int j, int d) {
  if (i < 1 || i >= j || j > d) throw DomainError("index_b: bad pair");
  return binom2(d) + j - 1 + (i - 1) * (2 * d - 2 - i) / 2;
}

int index_b_single(int j, int d) {
  if (j < 1 || j > binom2(d)) throw DomainError("index_b: bad single index");
  return j;
}

std::pair<int, int> index_b_inv(int k, int d) {
  const int dp = binom2(d);
  if (k < 1 || k > 2 * dp) throw DomainError("index_b_inv: out of range");
  if (k <= dp) return {0, k};
  for (int i = 1; i < d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      if (index_b_pair(i, j, d) == k) return {i, j};
    }
  }
  throw DomainError("index_b_inv: no preimage");
}

std::vector<int> corresponding_tuple(int i, int d) {
  const int dp = binom2(d);
  if (i < 1 || i > 2 * dp) throw DomainError("corresponding_tuple: bad index");
  std::vector<int> v(d + dp, 0);
  if (i <= dp) {
    for (int k = d + i - 1; k < d + dp; ++k) v[k] = 1;
    return v;
  }
  auto [a, b] = index_b_inv(i, d);
  for (int k = a - 1; k < b - 1; ++k) v[k] = 1;
  for (int k = b - 1; k < d; ++k) v[k] = 2;
  return v;
}

Permutation sigma_of_pair(const Partition& lambda, const Partition& nu) {
  const int d = static_cast<int>(lambda.size());
  const int dp = binom2(d);
  if (static_cast<int>(nu.size()) != dp) {
    throw DomainError("sigma_of_pair: nu must have d' parts");
  }
  std::vector<std::pair<int, int>> items;  // (value, b-index)
  for (int k = 1; k <= dp; ++k) items.emplace_back(nu[k - 1], k);
  for (int i = 1; i < d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      items.emplace_back(lambda[i - 1] + lambda[j - 1], index_b_pair(i, j, d));
    }
  }
  std::sort(items.begin(), items.end(), std::greater<>());
  Permutation sigma;
  for (const auto& it : items) sigma.push_back(it.second);
  return sigma;
}

bool in_script_S(const Permutation& sigma, int dprime) {
  const int n = 2 * dprime;
  if (static_cast<int>(sigma.size()) != n || !is_permutation(sigma)) {
    return false;
  }
  int small = 0;
  for (int i = 0; i < n; ++i) {
    if (sigma[i] <= dprime) ++small;
    if (small > i + 1 - small) return false;
  }
  for (int i = 0; i < n; ++i) {
    if (sigma[i] > dprime) continue;
    for (int j = i + 1; j < n; ++j) {
      if (sigma[j] > dprime || sigma[i] < sigma[j]) continue;
      for (int k = i; k < j; ++k) {
        if (sigma[k] <= sigma[k + 1]) return false;
      }
    }
  }
  return true;
}

void for_each_script_S(int dprime,
                       const std::function<void(const Permutation&)>& visit) {
  if (dprime < 1) throw DomainError("for_each_script_S needs d' >= 1");
  const int n = 2 * dprime;
  Permutation cur;
  cur.reserve(n);
  std::vector<bool> used(n + 1, false);
  // run_start[p]: first position of the strictly decreasing run ending at p.
  std::vector<int> run_start(n, 0);
  std::vector<int> small_pos(dprime + 1, -1);
  std::function<void(int)> rec = [&](int small) {
    const int p = static_cast<int>(cur.size());
    if (p == n) {
      visit(cur);
      return;
    }
    for (int z = 1; z <= n; ++z) {
      if (used[z]) continue;
      const bool is_small = z <= dprime;
      const int small_next = small + (is_small ? 1 : 0);
      if (small_next > p + 1 - small_next) continue;
      const bool continues = p > 0 && cur[p - 1] > z;
      const int start = continues ? run_start[p - 1] : p;
      if (is_small) {
        // Every earlier larger small value must sit inside the current run.
        bool ok = true;
        for (int y = z + 1; y <= dprime && ok; ++y) {
          if (small_pos[y] >= 0 && small_pos[y] < start) ok = false;
        }
        if (!ok) continue;
      }
      if (!continues && p > 0) {
        // Breaking the run: every placed small value must already have all
        // smaller small values placed before it, or a later one would fail.
        int placed = 0;
        int largest = 0;
        for (int y = 1; y <= dprime; ++y) {
          if (small_pos[y] >= 0) {
            ++placed;
            largest = y;
          }
        }
        if (placed != largest) continue;
      }
      used[z] = true;
      cur.push_back(z);
      run_start[p] = start;
      if (is_small) small_pos[z] = p;
      rec(small_next);
      if (is_small) small_pos[z] = -1;
      cur.pop_back();
      used[z] = false;
    }
  };
  rec(0);
}

std::vector<Permutation> enumerate_script_S(int dprime) {
  std::vector<Permutation> out;
  for_each_script_S(dprime, [&](const Permutation& s) { out.push_back(s); });
  return out;
}

DyckWord dyck_of_sigma(const Permutation& sigma, int dprime) {
  DyckWord w;
  for (int x : sigma) w.push_back(x > dprime ? '0' : '1');
  if (!is_dyck_word(w)) {
    throw DomainError("permutation is not in S_{2d'}: Dyck prefix fails");
  }
  return w;
}

bool is_dyck_word(const DyckWord& w) {
  int balance = 0;
  for (char c : w) {
    if (c == '0') {
      ++balance;
    } else if (c == '1') {
      if (--balance < 0) return false;
    } else {
      return false;
    }
  }
  return balance == 0;
}

std::vector<DyckWord> dyck_words(int dprime) {
  std::vector<DyckWord> out;
  std::string cur;
  std::function<void(int, int)> rec = [&](int zeros, int ones) {
    if (zeros == dprime && ones == dprime) {
      out.push_back(cur);
      return;
    }
    if (zeros < dprime) {
      cur.push_back('0');
      rec(zeros + 1, ones);
      cur.pop_back();
    }
    if (ones < zeros) {
      cur.push_back('1');
      rec(zeros, ones + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

Subset j_set(const Permutation& sigma, int dprime) {
  Permutation inv = inverse_permutation(sigma);
  Subset out;
  for (int j = 1; j < dprime; ++j) {
    if (inv[j - 1] < inv[j]) out.push_back(j);
  }
  return out;
}

std::pair<int, int> lm_sigma(const Permutation& sigma, int j, int dprime) {
  if (j < 0 || j > static_cast<int>(sigma.size())) {
    throw DomainError("lm_sigma: index out of range");
  }
  int L = 0;
  int M = 0;
  for (int i = 0; i < j; ++i) {
    if (sigma[i] > dprime) {
      ++L;
    } else {
      ++M;
    }
  }
  return {L, M};
}

std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Subset s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string subset_string(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace nilzeta
