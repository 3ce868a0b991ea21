// Command-line front end: compute, verify and inspect the subalgebra zeta
// functions of f_{2,d}.
//
// Exit codes: 0 success, 1 failed verification, 2 capacity or timeout,
// 3 oracle capacity, 64 invalid flags or inputs.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <new>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilzeta/oracle.hpp"
#include "nilzeta/render.hpp"
#include "nilzeta/verify.hpp"

using namespace nilzeta;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitOracleCapacity = 3;
constexpr int kExitUsage = 64;

struct Timeout {
  long done = 0;
  long total = 0;
  double seconds = 0;
};

struct Common {
  int d = 2;
  int threads = 1;
  double timeout = 0;  // seconds, 0 for none
  std::string cache_dir;
  bool no_cache = false;
  bool quiet = false;
};

// Progress callback writing heartbeat lines to stderr and enforcing the
// timeout. The last observed progress survives a timeout for the report.
class Heartbeat {
 public:
  explicit Heartbeat(const Common& c) : quiet_(c.quiet), timeout_(c.timeout) {}

  ComputeOptions options(int threads) {
    ComputeOptions o;
    o.threads = threads;
    o.progress = [this](long done, long total) { tick(done, total); };
    return o;
  }

 private:
  using Clock = std::chrono::steady_clock;

  void tick(long done, long total) {
    const auto now = Clock::now();
    const double elapsed = std::chrono::duration<double>(now - start_).count();
    if (!quiet_ && (done == total || now - last_ >= std::chrono::seconds(1))) {
      std::cerr << "progress: " << done << "/" << total << " pairs" << std::endl;
      last_ = now;
    }
    if (timeout_ > 0 && elapsed > timeout_ && done < total) throw Timeout{done, total, elapsed};
  }

  bool quiet_;
  double timeout_;
  Clock::time_point start_ = Clock::now();
  Clock::time_point last_ = start_;
};

std::optional<ResultCache> open_cache(const Common& c) {
  if (c.no_cache) return std::nullopt;
  return ResultCache(c.cache_dir);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file " + path);
  out << text;
}

// The JSON of a result without the wall-clock time, so that the output is
// identical across runs.
nlohmann::json stable_json(const ZetaResult& r) {
  auto j = zeta_to_json(r);
  j["provenance"].erase("seconds");
  return j;
}

void add_common(CLI::App* app, Common& c, bool with_d = true) {
  if (with_d) app->add_option("--d", c.d, "Number of generators (d >= 2)")->required();
  app->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--timeout", c.timeout, "Give up after this many seconds (0 = never)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--cache", c.cache_dir,
                  "Cache directory (default: $NILZETA_CACHE or ./.nilzeta-cache)");
  app->add_flag("--no-cache", c.no_cache, "Neither read nor write the cache");
  app->add_flag("--quiet", c.quiet, "No progress lines on stderr");
}

void require_d(int d) {
  if (d < 2) throw DomainError("d must be at least 2");
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  Common common;
  std::string kind = "padic";
  std::string word;
  std::string route = "H";
  std::string format = "text";
  std::string output;
};

int cmd_compute(const ComputeArgs& a) {
  require_d(a.common.d);
  const auto kind = parse_kind(a.kind);
  if (!kind) throw DomainError("unknown kind " + a.kind);
  if ((*kind == ZetaKind::overlap) != !a.word.empty()) {
    throw DomainError("--word is required for, and only for, --kind overlap");
  }
  if (a.route != "H" && a.route != "G") throw DomainError("--route must be H or G");
  if (a.route == "G" && *kind != ZetaKind::no_overlap) {
    throw DomainError("--route applies to --kind no-overlap only");
  }
  Heartbeat hb(a.common);
  const ComputeOptions opts = hb.options(a.common.threads);
  auto cache = open_cache(a.common);
  std::optional<ZetaResult> r;
  // Routed no-overlap results are not cached so that the two routes stay
  // independent.
  const bool cacheable = cache && a.route == "H";
  if (cacheable) r = cache->load(a.common.d, *kind, a.word);
  if (!r) {
    switch (*kind) {
      case ZetaKind::padic: r = zeta_padic(a.common.d, opts); break;
      case ZetaKind::overlap: r = zeta_overlap(a.common.d, a.word, opts); break;
      case ZetaKind::no_overlap:
        r = zeta_no_overlap(a.common.d,
                            a.route == "H" ? NoOverlapRoute::via_H : NoOverlapRoute::via_G, opts);
        break;
      case ZetaKind::reduced: r = zeta_reduced(a.common.d, opts); break;
      case ZetaKind::topological: r = zeta_topological(a.common.d, opts); break;
    }
    if (cacheable) cache->store(*r);
  }
  std::string text;
  if (a.format == "json") {
    text = stable_json(*r).dump(2) + "\n";
  } else if (a.format == "latex") {
    text = latex_zeta(*r) + "\n";
  } else {
    text = text_zeta(*r);
  }
  write_output(text, a.output);
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string suite = "all";
  long p = 2;
  int order = -1;
  int random = 50;
  unsigned seed = 1;
  int bound = -1;
};

int cmd_verify(const VerifyArgs& a) {
  const int d = a.common.d;
  require_d(d);
  Heartbeat hb(a.common);
  ZetaProvider z(hb.options(a.common.threads), open_cache(a.common));
  const bool all = a.suite == "all";
  std::vector<Check> checks;
  auto run = [&](const std::string& name, auto&& suite) {
    if (!all && a.suite != name) return;
    auto part = suite();
    for (const auto& c : part) std::cout << check_line(c) << std::endl;
    checks.insert(checks.end(), part.begin(), part.end());
  };
  run("golden", [&] { return verify_golden(d, z); });
  run("fe", [&] { return verify_functional_equations(d, z); });
  run("poles", [&] { return verify_poles(d, z); });
  run("oracle", [&] {
    const int order = a.order >= 0 ? a.order : (d == 2 ? 4 : 2);
    return verify_oracle(d, a.p, order);
  });
  run("reciprocity", [&] { return verify_reciprocity(d, a.random, a.seed); });
  run("bijections", [&] { return verify_bijections(d, a.bound >= 0 ? a.bound : 6); });
  const bool ok = all_ok(checks);
  std::cout << (ok ? "PASS" : "FAIL") << "  " << checks.size() << " checks" << std::endl;
  return ok ? 0 : kExitFailed;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  int d = 2;
  long p = 2;
  int n = 0;
  int compare = -1;
  std::string format = "text";
};

int cmd_oracle(const OracleArgs& a) {
  if (a.compare >= 0) {
    RouteComparison rc = compare_routes(a.d, a.p, a.compare);
    std::cout << (a.format == "json" ? rc.to_json().dump(2) + "\n" : rc.to_text());
    return rc.agree() ? 0 : kExitFailed;
  }
  std::cout << count_subalgebras(a.d, a.p, a.n) << std::endl;
  return 0;
}

// ---------------------------------------------------------------------------

struct ReportArgs {
  Common common;
  std::string format = "text";
};

int cmd_report(const ReportArgs& a) {
  const int d = a.common.d;
  require_d(d);
  Heartbeat hb(a.common);
  ZetaProvider z(hb.options(a.common.threads), open_cache(a.common));
  const ZetaResult& red = z.get(d, ZetaKind::reduced);
  const ZetaResult& top = z.get(d, ZetaKind::topological);
  const Rational c = z.c(d);
  PoleReport rep = pole_report(d, red, top, c);
  if (a.format == "json") {
    nlohmann::json j;
    j["d"] = d;
    j["D"] = rank_D(d);
    j["c_d"] = c.get_str();
    j["reduced_order_at_1"] = rep.reduced_order_at_1;
    j["reduced_residue_at_1"] = rep.reduced_residue_at_1.get_str();
    j["top_degree"] = rep.top_degree;
    j["top_pole_order_at_0"] = rep.top_pole_order_at_0;
    j["top_residue_at_0"] = rep.top_residue_at_0.get_str();
    j["top_limit_at_infinity"] = rep.top_limit_at_infinity.get_str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "d = " << d << ", D = " << rank_D(d) << "\n"
              << "c_d = " << c << "\n"
              << "reduced: pole order " << rep.reduced_order_at_1 << " at t = 1, coefficient "
              << rep.reduced_residue_at_1 << "\n"
              << "topological: degree " << rep.top_degree << ", pole order "
              << rep.top_pole_order_at_0 << " at s = 0, residue " << rep.top_residue_at_0
              << ", limit of s^D Z(s) at infinity " << rep.top_limit_at_infinity << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subalgebra zeta functions of the free class-2-nilpotent Lie rings f_{2,d}"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Compute one zeta function");
  add_common(compute, ca.common);
  compute->add_option("--kind", ca.kind, "padic | overlap | no-overlap | reduced | topological");
  compute->add_option("--word", ca.word, "Dyck word (required for --kind overlap)");
  compute->add_option("--route", ca.route, "No-overlap route: H or G");
  compute->add_option("--format", ca.format, "Output format")
      ->check(CLI::IsMember({"json", "latex", "text"}));
  compute->add_option("--output", ca.output, "Output file (default: stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify, va.common);
  verify->add_option("--suite", va.suite, "Suite to run")
      ->check(CLI::IsMember({"golden", "fe", "poles", "oracle", "reciprocity", "bijections", "all"}));
  verify->add_option("--p", va.p, "Prime for the oracle suite");
  verify->add_option("--order", va.order, "Highest power of t in the oracle suite");
  verify->add_option("--random", va.random, "Random monoids in the reciprocity suite")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", va.seed, "Seed for the random monoids");
  verify->add_option("--bound", va.bound, "Degree bound for the bijection checks")
      ->check(CLI::NonNegativeNumber);

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Count subalgebras of index p^n by HNF enumeration");
  oracle->add_option("--d", oa.d, "Number of generators")->required();
  oracle->add_option("--p", oa.p, "Prime")->required();
  auto* n_opt = oracle->add_option("--n", oa.n, "Exponent of the index");
  auto* cmp_opt = oracle->add_option("--compare", oa.compare,
                                     "Compare all routes for n = 0..N instead of counting");
  n_opt->excludes(cmp_opt);
  oracle->add_option("--format", oa.format, "Output format for --compare")
      ->check(CLI::IsMember({"json", "text"}));

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "Pole report of the reduced and topological zeta functions");
  add_common(report, ra.common);
  report->add_option("--format", ra.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(ca);
    if (*verify) return cmd_verify(va);
    if (*oracle) return cmd_oracle(oa);
    if (*report) return cmd_report(ra);
  } catch (const Timeout& t) {
    nlohmann::json j{{"status", "timeout"}, {"done", t.done}, {"total", t.total},
                     {"seconds", t.seconds}};
    std::cerr << j.dump() << std::endl;
    return kExitCapacity;
  } catch (const CapacityError& e) {
    nlohmann::json j{{"status", "capacity"}, {"message", e.what()},
                     {"estimate", e.estimate.get_str()}};
    std::cerr << j.dump() << std::endl;
    return kExitOracleCapacity;
  } catch (const std::bad_alloc&) {
    std::cerr << nlohmann::json{{"status", "capacity"}, {"message", "out of memory"}}.dump()
              << std::endl;
    return kExitCapacity;
  } catch (const StructuralError& e) {
    std::cerr << nlohmann::json{{"status", "capacity"}, {"message", e.what()}}.dump()
              << std::endl;
    return kExitCapacity;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  }
  return kExitUsage;
}
