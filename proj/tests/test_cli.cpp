// End-to-end checks of the apkit binary: exit codes, golden outputs,
// machine formats, determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "apkit/typespec.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = (env.empty() ? "" : env + " ") + std::string(APKIT_BIN_PATH) + " " +
                          args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("type spec grammar") {
  using apkit::format_type_spec;
  using apkit::parse_type_spec;
  using apkit::PartitionType;

  CHECK(parse_type_spec("1^4 2^3 3^2") == PartitionType({4, 3, 2}));
  CHECK(parse_type_spec("1^4,2^3, 3^2") == PartitionType({4, 3, 2}));
  CHECK(parse_type_spec("3^2") == PartitionType({0, 0, 2}));
  CHECK(parse_type_spec("3") == PartitionType({0, 0, 1}));  // omitted exponent
  CHECK(parse_type_spec("1^89 2^3 3^2 5^1 7^2") ==
        PartitionType({89, 3, 2, 0, 1, 0, 2}));  // gaps at 4 and 6
  CHECK(format_type_spec(PartitionType({4, 3, 2, 1})) == "1^4 2^3 3^2 4^1");
  CHECK(format_type_spec(PartitionType({0, 0, 2})) == "3^2");

  CHECK_THROWS_AS(parse_type_spec(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_spec("0^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_spec("2^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_spec("a^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_spec("2^1 2^1"), std::invalid_argument);

  // parse . format is the identity on canonical strings
  for (long long n = 1; n <= 10; ++n)
    for (const PartitionType& t : PartitionType::all_bound_to(n))
      CHECK(parse_type_spec(format_type_spec(t)) == t);
}

TEST_CASE("count: partition mode") {
  const RunResult r = run("count --n 6 --m 2 --type 3^2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "count: 9"));
  CHECK(contains(r.out, "minus-d"));
  CHECK(contains(r.out, "boundary-delta"));
}

TEST_CASE("count: subset mode") {
  const RunResult r = run("count --n 8 --m 2 --k 2 --p 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "count: 16"));
  CHECK(contains(r.out, "boundary-mpk"));
}

TEST_CASE("count: subset dispatch avoids the alternating sum beyond k = n/2") {
  // no closed form covers (6, 4, 3, 1); brute force must answer 0
  const RunResult r = run("count --n 6 --m 3 --k 4 --p 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "count: 0"));
  CHECK(contains(r.out, "enumeration"));
  // inside the validity domain the formula is used
  const RunResult h = run("count --n 6 --m 4 --k 2 --p 1");
  CHECK(h.exit_code == 0);
  CHECK(contains(h.out, "count: 9"));
  CHECK(contains(h.out, "hwang"));
}

TEST_CASE("count: json schema") {
  const RunResult r = run("count --n 20 --m 3 --type \"1^4 2^3 3^2 4^1\" --format json");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["command"] == "count");
  CHECK(report["input"]["n"] == 20);
  CHECK(report["delta"] == 10);
  CHECK(report["d"] == 1);
  CHECK(report["delta_class"] == "positive");
  CHECK(report["method"] == "positive-delta");
  CHECK(report["count"] == "25200");
  CHECK_FALSE(report.contains("elapsed_ms"));  // stable bytes unless --timings
}

TEST_CASE("enumerate: Z_6 golden lines") {
  const RunResult r = run("enumerate --n 6 --m 2 --type 3^2");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{(0,2,4),(1,3,5)}\n"
        "{(0,2,4),(3,5,1)}\n"
        "{(0,2,4),(5,1,3)}\n"
        "{(1,3,5),(2,4,0)}\n"
        "{(1,3,5),(4,0,2)}\n"
        "{(2,4,0),(3,5,1)}\n"
        "{(2,4,0),(5,1,3)}\n"
        "{(3,5,1),(4,0,2)}\n"
        "{(4,0,2),(5,1,3)}\n");
}

TEST_CASE("enumerate: subsets and count-only") {
  RunResult r = run("enumerate --n 8 --m 2 --subsets --k 2 --p 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "{0,1}\n"));
  CHECK(contains(r.out, "{6,7}\n"));
  long long lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 16);

  r = run("enumerate --n 8 --m 2 --subsets --k 2 --p 2 --count-only");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "16\n");

  r = run("enumerate --n 4 --m 1 --type 1^4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{(0),(1),(2),(3)}\n");
}

TEST_CASE("enumerate: limit refusal with guidance") {
  RunResult r = run("enumerate --n 6 --m 2 --type 3^2 --limit 5");
  CHECK(r.exit_code == 2);
  r = run("enumerate --n 6 --m 2 --type 3^2 --limit 5 --count-only");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "9\n");
  // the environment cap plays the same role when --limit is absent
  r = run("enumerate --n 6 --m 2 --type 3^2", "APKIT_MAX_ENUM=5");
  CHECK(r.exit_code == 2);
  r = run("enumerate --n 6 --m 2 --type 3^2", "APKIT_MAX_ENUM=50");
  CHECK(r.exit_code == 0);
  r = run("enumerate --n 6 --m 2 --type 3^2", "APKIT_MAX_ENUM=bogus");
  CHECK(r.exit_code == 2);
}

TEST_CASE("invalid inputs exit 2") {
  CHECK(run("count --n 6 --m 2 --type 3^x").exit_code == 2);
  CHECK(run("count --n 7 --m 2 --type 3^2").exit_code == 2);     // type binds 6, not 7
  CHECK(run("count --n 6 --m 2 --type 3^2 --k 2").exit_code == 2);  // both modes
  CHECK(run("count --n 6 --m 2").exit_code == 2);                // neither mode
  CHECK(run("count --n 6 --m 2 --type \"3^1 3^1\"").exit_code == 2);  // duplicate base
  CHECK(run("count --n 0 --m 2 --type 3^2").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("verify --max-n 15").exit_code == 2);
  CHECK(run("verify --max-n 5 --theorems unknown").exit_code == 2);
  CHECK(run("identity --trials 0").exit_code == 2);
  CHECK(run("table --n-range 9..3").exit_code == 2);
  CHECK(run("table --n-range 25..25").exit_code == 2);  // types all beyond the cap
}

TEST_CASE("help exits 0") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("count --help").exit_code == 0);
}

TEST_CASE("verify: small grid passes, hwang-only subset") {
  RunResult r = run("verify --max-n 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "PASS  total"));

  r = run("verify --max-n 6 --theorems hwang --format json");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["pass"] == true);
  CHECK(report["grids"].size() == 1);
  CHECK(report["grids"][0]["name"] == "hwang");
  CHECK(report["grids"][0]["mismatches"].empty());

  r = run("verify --max-n 1");
  CHECK(r.exit_code == 0);  // vacuous-to-tiny grids still pass
}

TEST_CASE("identity: deterministic bytes for a fixed seed") {
  const std::string args = "identity --m-max 2 --trials 60 --seed 7 --format json";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const json report = json::parse(a.out);
  CHECK(report["passes"] == 60);
  CHECK(report["input"]["seed"] == 7);
}

TEST_CASE("identity: negative control must fail with exit 1") {
  const RunResult r = run("identity --m-max 2 --trials 20 --seed 42 --negative-control");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "FAIL"));
  CHECK(contains(r.out, "counterexample"));
}

TEST_CASE("verify output is byte-deterministic") {
  const RunResult a = run("verify --max-n 5 --format json");
  const RunResult b = run("verify --max-n 5 --format json --jobs 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);  // job count must not change the report
}

TEST_CASE("table: csv grid and file output") {
  const RunResult r = run("table --n-range 6..6 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n,m,type,d,delta,delta_class,cwz,method,count\n"));
  CHECK(contains(r.out, "6,2,3^2,2,-2,minus-d,false,boundary-delta,9\n"));
  CHECK(contains(r.out, "6,1,1^6,1,6,positive,true,positive-delta,1\n"));

  const RunResult f = run("table --n-range 6..6 --types 3^2 --out /tmp/apkit_table_test.csv");
  CHECK(f.exit_code == 0);
  std::ifstream file("/tmp/apkit_table_test.csv");
  REQUIRE(file.good());
  std::string content((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  CHECK(contains(content, "6,2,3^2,"));

  // a type that binds nothing in range: header only
  const RunResult empty = run("table --n-range 5..5 --types 3^2");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "n,m,type,d,delta,delta_class,cwz,method,count\n");
}

TEST_CASE("table: json rows") {
  const RunResult r = run("table --n-range 6..6 --types 3^2 --m-range 2..2 --format json");
  CHECK(r.exit_code == 0);
  const json rows = json::parse(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["n"] == 6);
  CHECK(rows[0]["m"] == 2);
  CHECK(rows[0]["count"] == "9");
  CHECK(rows[0]["cwz"] == false);
}
