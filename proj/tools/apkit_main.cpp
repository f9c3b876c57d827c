// apkit: exact counting and enumeration of m-AP-partitions of Z_n and
// separation-constrained subsets, with closed-form/oracle cross-verification.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "apkit/enumerate.hpp"
#include "apkit/formulas.hpp"
#include "apkit/identity.hpp"
#include "apkit/numeric.hpp"
#include "apkit/typespec.hpp"
#include "apkit/verify.hpp"

using json = nlohmann::ordered_json;
using namespace apkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

long long default_enum_limit() {
  if (const char* env = std::getenv("APKIT_MAX_ENUM")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("APKIT_MAX_ENUM must be a positive integer");
  }
  return 100000;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long long v = std::stoll(text);
      if (v < 1) throw std::invalid_argument("");
      return {v, v};
    }
    const long long a = std::stoll(text.substr(0, dots));
    const long long b = std::stoll(text.substr(dots + 2));
    if (a < 1 || b < a) throw std::invalid_argument("");
    return {a, b};
  } catch (...) {
    throw std::invalid_argument("bad range '" + text + "' (expected A..B with 1 <= A <= B)");
  }
}

// ---- count ----

struct CountOptions {
  long long n = 0;
  long long m = 0;
  std::string type;
  std::optional<long long> k;
  long long p = 1;
  long long budget = 5'000'000;
  std::string format = "text";
  bool timings = false;
};

int run_count(const CountOptions& opt) {
  Clock clock;
  json report;
  report["command"] = "count";
  ExactInt count;
  std::string method;
  std::optional<DeltaClass> delta;

  if (!opt.type.empty()) {
    const PartitionType t = parse_type_spec(opt.type);
    if (!t.binds(opt.n))
      throw std::invalid_argument("type " + format_type_spec(t) + " does not bind n=" +
                                  std::to_string(opt.n) + " (sum i*k_i = " +
                                  std::to_string(t.weighted_sum()) + ")");
    report["input"] = {{"n", opt.n}, {"m", opt.m}, {"type", format_type_spec(t)}};
    delta = delta_classify(opt.n, opt.m, t);
    const CountResult r = count_auto(opt.n, opt.m, t, opt.budget);
    count = r.count;
    method = to_string(r.method);
  } else {
    const long long k = *opt.k;
    const long long n = opt.n, m = opt.m, p = opt.p;
    if (k < 0) throw std::invalid_argument("count: --k must be >= 0");
    report["input"] = {{"n", n}, {"m", m}, {"k", k}, {"p", p}};
    if (n >= (p + 1) * k) delta = delta_classify(n, m, PartitionType::separation_type(n, k, p));
    if (n >= m * p * k + 1) {
      count = count_mansour_sun(n, k, m, p);
      method = "mansour-sun";
    } else if (n == m * p * k && k >= 2) {
      count = count_separated_at_mpk(m, p, k);
      method = "boundary-mpk";
    } else if (n == m * p * k - m && p * k > p + 1) {
      count = count_separated_at_mpk_minus_m(m, p, k);
      method = "boundary-mpk-minus-m";
    } else if (p == 1 && m % n != 0 && 2 * k <= n) {
      // the alternating sum is only valid for k <= n/2
      count = hwang_count(n, k, m % n);
      method = "hwang";
    } else {
      if (n > 40)
        throw std::invalid_argument(
            "no closed form applies to this subset instance and n > 40 is too large for "
            "brute force");
      count = count_separated_subsets({n, k, m, p});
      method = "enumeration";
    }
  }

  if (delta) {
    report["delta"] = delta->delta;
    report["d"] = delta->d;
    report["delta_class"] = to_string(delta->regime);
  } else {
    report["delta"] = nullptr;
    report["d"] = nullptr;
    report["delta_class"] = nullptr;
  }
  report["method"] = method;
  // counts outgrow 64-bit integers, so they are serialized as decimal strings
  report["count"] = count.str();
  if (opt.timings) report["elapsed_ms"] = clock.ms();

  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "count: " << count.str() << "\n";
    if (delta)
      std::cout << "delta: " << delta->delta << " (" << to_string(delta->regime)
                << "), d = " << delta->d << "\n";
    std::cout << "method: " << method << "\n";
  }
  return kExitOk;
}

// ---- enumerate ----

struct EnumerateOptions {
  long long n = 0;
  long long m = 0;
  std::string type;
  bool subsets = false;
  std::optional<long long> k;
  long long p = 1;
  std::optional<long long> limit;
  bool count_only = false;
  std::string format = "text";
  bool timings = false;
};

int run_enumerate(const EnumerateOptions& opt) {
  Clock clock;
  const long long limit = opt.limit ? *opt.limit : default_enum_limit();
  if (limit < 1) throw std::invalid_argument("enumerate: --limit must be >= 1");
  json report;
  report["command"] = "enumerate";

  json items = json::array();
  std::vector<std::string> lines;
  ExactInt count;

  if (opt.subsets) {
    if (*opt.k < 0) throw std::invalid_argument("enumerate: --k must be >= 0");
    const SeparationSpec spec{opt.n, *opt.k, opt.m, opt.p};
    report["input"] = {{"n", opt.n}, {"m", opt.m}, {"k", *opt.k}, {"p", opt.p}};
    if (opt.count_only) {
      count = count_separated_subsets(spec);
    } else {
      std::vector<std::vector<long long>> subsets;
      visit_separated_subsets(spec, [&](const std::vector<long long>& s) {
        subsets.push_back(s);
        return static_cast<long long>(subsets.size()) <= limit;
      });
      if (static_cast<long long>(subsets.size()) > limit)
        throw std::invalid_argument("output exceeds the cap of " + std::to_string(limit) +
                                    " subsets; pass --count-only or raise --limit");
      count = static_cast<long long>(subsets.size());
      for (const auto& s : subsets) {
        std::string line = "{";
        for (std::size_t i = 0; i < s.size(); ++i)
          line += (i ? "," : "") + std::to_string(s[i]);
        line += "}";
        lines.push_back(line);
        items.push_back(s);
      }
    }
  } else {
    const PartitionType t = parse_type_spec(opt.type);
    if (!t.binds(opt.n))
      throw std::invalid_argument("type " + format_type_spec(t) + " does not bind n=" +
                                  std::to_string(opt.n));
    report["input"] = {{"n", opt.n}, {"m", opt.m}, {"type", format_type_spec(t)}};
    if (opt.count_only) {
      count = count_ap_partitions(opt.n, opt.m, t);
    } else {
      std::vector<ApPartition> parts;
      visit_ap_partitions(opt.n, opt.m, t, [&](const ApPartition& p) {
        parts.push_back(p);
        return static_cast<long long>(parts.size()) <= limit;
      });
      if (static_cast<long long>(parts.size()) > limit)
        throw std::invalid_argument("output exceeds the cap of " + std::to_string(limit) +
                                    " partitions; pass --count-only or raise --limit");
      std::sort(parts.begin(), parts.end());
      count = static_cast<long long>(parts.size());
      for (const ApPartition& p : parts) {
        lines.push_back(to_string(p));
        json blocks = json::array();
        for (const ApBlock& b : p.blocks) blocks.push_back(b.elements());
        items.push_back(blocks);
      }
    }
  }

  report["count"] = count.str();
  if (!opt.count_only) report["items"] = items;
  if (opt.timings) report["elapsed_ms"] = clock.ms();

  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const std::string& line : lines) std::cout << line << "\n";
    if (opt.count_only) std::cout << count.str() << "\n";
  }
  return kExitOk;
}

// ---- verify ----

struct VerifyOptions {
  long long max_n = 12;
  std::string theorems;
  long long jobs = 1;
  std::string format = "text";
  bool timings = false;
};

int run_verify_cmd(const VerifyOptions& opt) {
  if (opt.max_n < 1 || opt.max_n > kMaxSubsetGridN)
    throw std::invalid_argument("verify: --max-n must be in [1, " +
                                std::to_string(kMaxSubsetGridN) +
                                "] (brute-force oracles cap the grid)");
  std::vector<std::string> names;
  if (!opt.theorems.empty()) {
    std::string cur;
    for (char c : opt.theorems + ",") {
      if (c == ',') {
        if (!cur.empty()) names.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
  }
  const std::vector<GridOutcome> outcomes = run_verify(opt.max_n, names, opt.jobs);

  json report;
  report["command"] = "verify";
  report["max_n"] = opt.max_n;
  json grids = json::array();
  bool all_ok = true;
  long long total = 0;
  for (const GridOutcome& g : outcomes) {
    all_ok = all_ok && g.ok();
    total += g.checks;
    json jg;
    jg["name"] = g.name;
    jg["checks"] = g.checks;
    jg["pass"] = g.ok();
    json mismatches = json::array();
    for (const GridMismatch& mm : g.mismatches)
      mismatches.push_back(
          {{"instance", mm.instance}, {"expected", mm.expected}, {"actual", mm.actual}});
    jg["mismatches"] = mismatches;
    if (opt.timings) jg["elapsed_ms"] = g.elapsed_ms;
    grids.push_back(jg);
  }
  report["grids"] = grids;
  report["pass"] = all_ok;

  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const GridOutcome& g : outcomes) {
      std::cout << (g.ok() ? "PASS" : "FAIL") << "  " << g.name << "  (" << g.checks
                << " checks)";
      if (opt.timings) std::cout << "  [" << static_cast<long long>(g.elapsed_ms) << " ms]";
      std::cout << "\n";
      for (const GridMismatch& mm : g.mismatches)
        std::cout << "      mismatch at " << mm.instance << ": expected " << mm.expected
                  << ", got " << mm.actual << "\n";
    }
    std::cout << (all_ok ? "PASS" : "FAIL") << "  total (" << total << " checks)\n";
  }
  return all_ok ? kExitOk : kExitMismatch;
}

// ---- identity ----

struct IdentityOptions {
  long long m_max = 3;
  long long z_bound = 3;
  long long cap_bound = 4;
  long long xy_bound = 30;
  long long trials = 1000;
  std::uint64_t seed = 42;
  bool negative_control = false;
  std::string format = "text";
  bool timings = false;
};

int run_identity(const IdentityOptions& opt) {
  Clock clock;
  RmSuiteParams params;
  params.m_max = opt.m_max;
  params.z_bound = opt.z_bound;
  params.cap_bound = opt.cap_bound;
  params.xy_bound = opt.xy_bound;
  params.trials = opt.trials;
  params.seed = opt.seed;

  RhsEvaluator evaluator;  // default: the real right-hand side
  if (opt.negative_control)
    evaluator = [](const RmInstance& inst) { return rm_rhs(inst) + ExactRat(1); };

  const RmSuiteReport result = rm_random_suite(params, evaluator);

  json report;
  report["command"] = "identity";
  report["input"] = {{"m_max", opt.m_max},
                     {"z_bound", opt.z_bound},
                     {"cap_bound", opt.cap_bound},
                     {"xy_bound", opt.xy_bound},
                     {"trials", opt.trials},
                     {"seed", opt.seed},
                     {"negative_control", opt.negative_control}};
  report["trials"] = result.trials;
  report["passes"] = result.passes;
  report["failures"] = result.failures;
  report["pass"] = result.failures == 0;
  if (result.first_failure) report["first_failure"] = result.first_failure->to_string();
  if (opt.timings) report["elapsed_ms"] = clock.ms();

  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << (result.failures == 0 ? "PASS" : "FAIL") << "  " << result.passes << "/"
              << result.trials << " instances (seed " << opt.seed << ")\n";
    if (result.first_failure)
      std::cout << "first counterexample: " << result.first_failure->to_string() << "\n";
  }
  return result.failures == 0 ? kExitOk : kExitMismatch;
}

// ---- table ----

struct TableOptions {
  std::string n_range;
  std::string m_range;
  std::string types = "all";
  std::string format = "csv";
  std::string out;
};

int run_table(const TableOptions& opt) {
  const auto [n_lo, n_hi] = parse_range(opt.n_range);
  std::optional<std::pair<long long, long long>> m_range;
  if (!opt.m_range.empty()) m_range = parse_range(opt.m_range);

  std::optional<PartitionType> fixed_type;
  if (opt.types != "all") fixed_type = parse_type_spec(opt.types);
  if (!fixed_type && n_hi > 20)
    throw std::invalid_argument(
        "table: --types all is limited to n <= 20; pass an explicit --types spec");

  json rows = json::array();
  std::string csv = "n,m,type,d,delta,delta_class,cwz,method,count\n";
  for (long long n = n_lo; n <= n_hi; ++n) {
    std::vector<PartitionType> types;
    if (fixed_type) {
      if (!fixed_type->binds(n)) continue;  // type applies only where it binds
      types.push_back(*fixed_type);
    } else {
      types = PartitionType::all_bound_to(n);
    }
    const long long m_lo = m_range ? m_range->first : 1;
    const long long m_hi = m_range ? m_range->second : n;
    for (const PartitionType& t : types) {
      for (long long m = m_lo; m <= m_hi; ++m) {
        const DeltaClass dc = delta_classify(n, m, t);
        const bool cwz = cwz_condition(m, t);
        // closed forms only: the table never falls back to enumeration
        std::string method = "none";
        std::string count;
        if (dc.regime == DeltaRegime::positive) {
          method = to_string(CountMethod::positive_delta);
          count = count_positive_delta(n, m, t).str();
        } else if (dc.regime == DeltaRegime::zero || dc.regime == DeltaRegime::minus_d) {
          method = to_string(CountMethod::boundary_delta);
          count = count_boundary_delta(n, m, t).str();
        }
        const std::string type_str = format_type_spec(t);
        csv += std::to_string(n) + "," + std::to_string(m) + "," + type_str + "," +
               std::to_string(dc.d) + "," + std::to_string(dc.delta) + "," +
               to_string(dc.regime) + "," + (cwz ? "true" : "false") + "," + method + "," +
               count + "\n";
        json row;
        row["n"] = n;
        row["m"] = m;
        row["type"] = type_str;
        row["d"] = dc.d;
        row["delta"] = dc.delta;
        row["delta_class"] = to_string(dc.regime);
        row["cwz"] = cwz;
        row["method"] = method;
        if (count.empty())
          row["count"] = nullptr;
        else
          row["count"] = count;
        rows.push_back(row);
      }
    }
  }

  const std::string payload = opt.format == "json" ? rows.dump(2) + "\n" : csv;
  if (!opt.out.empty()) {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw std::invalid_argument("table: cannot open output file '" + opt.out + "'");
    file << payload;
  } else {
    std::cout << payload;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic-progression partition and subset counting for Z_n"};
  app.require_subcommand(1);

  CountOptions count_opt;
  CLI::App* count = app.add_subcommand("count", "count partitions or separated subsets");
  count->add_option("--n", count_opt.n, "modulus of Z_n")->required()->check(CLI::PositiveNumber);
  count->add_option("--m", count_opt.m, "progression difference / separation step")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* type_flag =
      count->add_option("--type", count_opt.type, "partition type, e.g. \"1^4 2^3\"");
  auto* k_flag = count->add_option("--k", count_opt.k, "subset size (subset mode)");
  count->add_option("--p", count_opt.p, "separation multiplicity bound (subset mode)")
      ->check(CLI::PositiveNumber);
  count->add_option("--budget", count_opt.budget, "search-node cap for enumeration fallback")
      ->check(CLI::PositiveNumber);
  count->add_option("--format", count_opt.format)->check(CLI::IsMember({"text", "json"}));
  count->add_flag("--timings", count_opt.timings, "include elapsed_ms in reports");
  type_flag->excludes(k_flag);
  k_flag->excludes(type_flag);

  EnumerateOptions enum_opt;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list partitions or separated subsets");
  enumerate->add_option("--n", enum_opt.n, "modulus of Z_n")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--m", enum_opt.m, "progression difference / separation step")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* etype = enumerate->add_option("--type", enum_opt.type, "partition type");
  auto* esub = enumerate->add_flag("--subsets", enum_opt.subsets, "subset mode");
  auto* ek = enumerate->add_option("--k", enum_opt.k, "subset size");
  enumerate->add_option("--p", enum_opt.p, "separation multiplicity bound")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--limit", enum_opt.limit,
                        "refuse outputs larger than this (default APKIT_MAX_ENUM or 100000)");
  enumerate->add_flag("--count-only", enum_opt.count_only, "print only the count");
  enumerate->add_option("--format", enum_opt.format)->check(CLI::IsMember({"text", "json"}));
  enumerate->add_flag("--timings", enum_opt.timings);
  etype->excludes(esub);
  esub->needs(ek);

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "closed forms vs brute-force oracle grids");
  verify->add_option("--max-n", verify_opt.max_n, "grid bound (partitions cap 12, subsets 14)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--theorems", verify_opt.theorems,
                     "comma list: positive,boundary,msun,mpk,mpk-minus-m,hwang,bijections,multisum,cwz,rm");
  verify->add_option("--jobs", verify_opt.jobs, "parallel workers")->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_opt.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timings", verify_opt.timings);

  IdentityOptions id_opt;
  CLI::App* identity = app.add_subcommand("identity", "seeded random convolution-identity suite");
  identity->add_option("--m-max", id_opt.m_max)->check(CLI::PositiveNumber);
  identity->add_option("--z-bound", id_opt.z_bound)->check(CLI::PositiveNumber);
  identity->add_option("--n-bound", id_opt.cap_bound, "bound on the N_i caps")
      ->check(CLI::PositiveNumber);
  identity->add_option("--xy-bound", id_opt.xy_bound)->check(CLI::PositiveNumber);
  identity->add_option("--trials", id_opt.trials);
  identity->add_option("--seed", id_opt.seed);
  identity
      ->add_flag("--negative-control", id_opt.negative_control,
                 "corrupt the right-hand side evaluator (must fail)")
      ->group("");  // hidden: test fixture
  identity->add_option("--format", id_opt.format)->check(CLI::IsMember({"text", "json"}));
  identity->add_flag("--timings", id_opt.timings);

  TableOptions table_opt;
  CLI::App* table = app.add_subcommand("table", "closed-form count table over an (n, m) grid");
  table->add_option("--n-range", table_opt.n_range, "A..B")->required();
  table->add_option("--m-range", table_opt.m_range, "A..B (default 1..n)");
  table->add_option("--types", table_opt.types, "all | explicit type spec");
  table->add_option("--format", table_opt.format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_opt.out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (count->parsed()) {
      if (count_opt.type.empty() && !count_opt.k)
        throw std::invalid_argument("count: pass either --type or --k");
      return run_count(count_opt);
    }
    if (enumerate->parsed()) {
      if (!enum_opt.subsets && enum_opt.type.empty())
        throw std::invalid_argument("enumerate: pass either --type or --subsets --k");
      return run_enumerate(enum_opt);
    }
    if (verify->parsed()) return run_verify_cmd(verify_opt);
    if (identity->parsed()) return run_identity(id_opt);
    if (table->parsed()) return run_table(table_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
