#include "nilzeta/oracle.hpp"

#include <sstream>

#include "nilzeta/combinat.hpp"
#include "nilzeta/zeta.hpp"

namespace nilzeta {

namespace {

void require_oracle_input(int d, long p, int n) {
  if (d < 2) throw DomainError("oracle: d must be at least 2");
  if (n < 0) throw DomainError("oracle: n must be nonnegative");
  if (p < 2) throw DomainError("oracle: p must be prime");
  for (long k = 2; k * k <= p; ++k) {
    if (p % k == 0) throw DomainError("oracle: p must be prime");
  }
}

long ipow(long p, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

Integer evaluate_at(const LaurentPolynomial& f, long p) {
  Rational sum = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational pe = 1;
    for (int i = 0; i < std::abs(e[0]); ++i) pe *= p;
    sum += e[0] >= 0 ? Rational(c * pe) : Rational(c / pe);
  }
  sum.canonicalize();
  if (sum.get_den() != 1) throw StructuralError("oracle: non-integral count");
  return sum.get_num();
}

// Calls visit on every composition of n into `parts` nonnegative parts.
void for_each_composition(int n, int parts, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(n);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= n; ++k) {
    cur.push_back(k);
    for_each_composition(n - k, parts, cur, visit);
    cur.pop_back();
  }
}

// Upper-triangular lattice basis stored by columns.
class TriangularLattice {
 public:
  explicit TriangularLattice(int D) : D_(D), h_(D, std::vector<long>(D, 0)) {}

  long& at(int row, int col) { return h_[col][row]; }
  const std::vector<long>& column(int col) const { return h_[col]; }

  // Back-substitution from the last coordinate.
  bool contains(std::vector<long> w) const {
    for (int i = D_ - 1; i >= 0; --i) {
      if (w[i] == 0) continue;
      const long diag = h_[i][i];
      if (w[i] % diag != 0) return false;
      const long c = w[i] / diag;
      for (int r = 0; r <= i; ++r) w[r] -= c * h_[i][r];
    }
    return true;
  }

 private:
  int D_;
  std::vector<std::vector<long>> h_;
};

bool closed_under_bracket(const TriangularLattice& lat, const StructureConstants& sc) {
  const int D = sc.rank();
  for (int i = 0; i < D; ++i) {
    for (int j = i + 1; j < D; ++j) {
      if (!lat.contains(sc.bracket(lat.column(i), lat.column(j)))) return false;
    }
  }
  return true;
}

}  // namespace

int StructureConstants::y_index(int i, int j) const {
  // Pairs (a, b) with a < i come first.
  int k = d;
  for (int a = 1; a < i; ++a) k += d - a;
  return k + (j - i - 1);
}

std::vector<long> StructureConstants::bracket(const std::vector<long>& u,
                                              const std::vector<long>& v) const {
  std::vector<long> out(rank(), 0);
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      out[y_index(i, j)] = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
    }
  }
  return out;
}

Integer hnf_candidate_count(int D, long p, int n) {
  // ways[k] = number of forms on the trailing rows whose diagonal uses p^k.
  std::vector<Integer> ways(n + 1, 0);
  ways[0] = 1;
  for (int row = D - 1; row >= 0; --row) {
    const int free_entries = D - 1 - row;
    std::vector<Integer> next(n + 1, 0);
    for (int used = 0; used <= n; ++used) {
      if (ways[used] == 0) continue;
      Integer weight = 1;
      for (int e = 0; used + e <= n; ++e) {
        next[used + e] += ways[used] * weight;
        for (int k = 0; k < free_entries; ++k) weight *= p;
      }
    }
    ways = std::move(next);
  }
  return ways[n];
}

Integer count_subalgebras(int d, long p, int n) {
  require_oracle_input(d, p, n);
  StructureConstants sc{d};
  const int D = sc.rank();
  const Integer estimate = hnf_candidate_count(D, p, n);
  if (estimate > kOracleCandidateLimit) {
    throw CapacityError("count_subalgebras: " + estimate.get_str() +
                            " candidates exceed the limit of " +
                            std::to_string(kOracleCandidateLimit),
                        estimate);
  }
  Integer total = 0;
  std::vector<int> cur;
  for_each_composition(n, D, cur, [&](const std::vector<int>& e) {
    TriangularLattice lat(D);
    std::vector<std::pair<int, int>> free;  // (row, col) of reducible entries
    std::vector<long> modulus;
    for (int i = 0; i < D; ++i) {
      lat.at(i, i) = ipow(p, e[i]);
      if (e[i] == 0) continue;
      for (int j = i + 1; j < D; ++j) {
        free.emplace_back(i, j);
        modulus.push_back(lat.at(i, i));
      }
    }
    // Odometer over the entries above the diagonal, each reduced modulo the
    // diagonal entry of its row.
    while (true) {
      if (closed_under_bracket(lat, sc)) total += 1;
      std::size_t k = 0;
      for (; k < free.size(); ++k) {
        long& x = lat.at(free[k].first, free[k].second);
        if (++x < modulus[k]) break;
        x = 0;
      }
      if (k == free.size()) break;
    }
  });
  return total;
}

std::vector<Integer> gss_partial(int d, long p, int N) {
  require_oracle_input(d, p, std::max(N, 0));
  const int dp = binom2(d);
  std::vector<Integer> out(N + 1, 0);
  for (const auto& lambda : partitions_in_box(d, N)) {
    const int size_l = partition_size(lambda);
    if (size_l > N) continue;
    const Partition top(d, lambda[0]);
    const Integer a1 = evaluate_at(alpha_count(top, lambda), p);
    const Partition mu = mu_of_lambda(lambda);
    for (const auto& nu : partitions_in_box(dp, std::min(mu[0], N - size_l))) {
      const int size_n = partition_size(nu);
      if (size_l + size_n > N || !partition_leq(nu, mu)) continue;
      Integer pw = 1;
      for (int k = 0; k < d * size_n; ++k) pw *= p;
      out[size_l + size_n] += a1 * evaluate_at(alpha_count(mu, nu), p) * pw;
    }
  }
  return out;
}

std::string RouteComparison::to_text() const {
  std::ostringstream os;
  os << "d=" << d << " p=" << p << " N=" << N << "\n";
  os << "n\tseries\tgss\tbrute\n";
  for (int n = 0; n <= N; ++n) {
    os << n << "\t" << series[n] << "\t" << gss[n] << "\t" << brute[n];
    if (first_mismatch && *first_mismatch == n) os << "\tMISMATCH";
    os << "\n";
  }
  os << (agree() ? "all routes agree" : "routes disagree") << "\n";
  return os.str();
}

nlohmann::json RouteComparison::to_json() const {
  auto strings = [](const std::vector<Integer>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
  };
  nlohmann::json j;
  j["d"] = d;
  j["p"] = p;
  j["N"] = N;
  j["series"] = strings(series);
  j["gss"] = strings(gss);
  j["brute"] = strings(brute);
  j["agree"] = agree();
  j["first_mismatch"] = first_mismatch ? nlohmann::json(*first_mismatch) : nlohmann::json();
  return j;
}

RouteComparison compare_routes(int d, long p, int N) {
  require_oracle_input(d, p, N);
  RouteComparison rc;
  rc.d = d;
  rc.p = p;
  rc.N = N;
  for (const auto& c : rf_series_coeffs(zeta_padic(d).rational(), p, N)) {
    if (c.get_den() != 1) throw StructuralError("compare_routes: non-integral coefficient");
    rc.series.push_back(c.get_num());
  }
  rc.gss = gss_partial(d, p, N);
  for (int n = 0; n <= N; ++n) rc.brute.push_back(count_subalgebras(d, p, n));
  for (int n = 0; n <= N; ++n) {
    if (rc.series[n] != rc.gss[n] || rc.gss[n] != rc.brute[n]) {
      rc.first_mismatch = n;
      break;
    }
  }
  return rc;
}

}  // namespace nilzeta
