// End-to-end checks of the command line binary: subcommands, exit codes,
// stdout/stderr split. Runs from the repository root against data/.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "proc.hpp"

using testutil::run_cli;

TEST_CASE("solve reproduces the dataset-1 totals from CSV") {
  const auto run = run_cli("solve data/table1.csv --deckle-width 201 --trim-allowance 1");
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("totals: 34 reels, trim loss 230 cm, lower bound 33") != std::string::npos);
  CHECK(run.out.find("D4 (2) + D3 (2)") != std::string::npos);
}

TEST_CASE("solve reads JSON pools and other formats") {
  CHECK(run_cli("solve data/table2.json").out.find("totals: 124 reels, trim loss 2620 mm") !=
        std::string::npos);
  const auto json = run_cli("solve data/table1.json --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"used_reels\": 34") != std::string::npos);
  const auto csv = run_cli("solve data/table1.json --format csv --algorithm first-fit");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("first-fit,") != std::string::npos);
}

TEST_CASE("deckle flags are required for CSV and rejected for JSON") {
  const auto missing = run_cli("solve data/table1.csv");
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("--deckle-width") != std::string::npos);

  const auto extra = run_cli("solve data/table1.json --deckle-width 201");
  CHECK(extra.exit_code == 1);
  CHECK(extra.err.find("deckle") != std::string::npos);
}

TEST_CASE("bound prints the demand width and reel bound") {
  const auto run = run_cli("bound data/table2.json");
  CHECK(run.exit_code == 0);
  CHECK(run.out == "demand_width=307380 lower_bound=123\n");
  CHECK(run_cli("bound data/table1.csv --deckle-width 201 --trim-allowance 1").out ==
        "demand_width=6570 lower_bound=33\n");
}

TEST_CASE("exit codes are the documented contract") {
  // 1: I/O and parse problems
  CHECK(run_cli("solve no_such_file.json").exit_code == 1);
  std::ofstream("/tmp/papercut_bad.json") << "{ not json";
  CHECK(run_cli("solve /tmp/papercut_bad.json").exit_code == 1);
  std::remove("/tmp/papercut_bad.json");

  // 3: unsatisfiable pool
  std::ofstream("/tmp/papercut_wide.csv") << "id,width,count\nA,300,1\n";
  const auto unsat = run_cli("solve /tmp/papercut_wide.csv --deckle-width 201 --trim-allowance 1");
  CHECK(unsat.exit_code == 3);
  CHECK(unsat.err.find("300") != std::string::npos);
  CHECK(run_cli("bound /tmp/papercut_wide.csv --deckle-width 201 --trim-allowance 1").exit_code ==
        3);
  std::remove("/tmp/papercut_wide.csv");

  // 1: the exact guard on a large instance
  const auto guarded = run_cli("solve data/table1.json --algorithm exact");
  CHECK(guarded.exit_code == 1);
  CHECK(guarded.err.find("guard") != std::string::npos);

  // 1: usage errors
  CHECK(run_cli("solve data/table1.json --algorithm quantum").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("validate accepts the published schedule and flags tampering") {
  const auto ok = run_cli("validate data/table1.json data/table3_schedule.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("valid") != std::string::npos);

  std::ifstream in("data/table3_schedule.json");
  std::string document((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  document.replace(document.find("\"reels\": 2"), 10, "\"reels\": 1");
  std::ofstream("/tmp/papercut_tampered.json") << document;
  const auto bad = run_cli("validate data/table1.json /tmp/papercut_tampered.json");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("demand-exact") != std::string::npos);
  std::remove("/tmp/papercut_tampered.json");
}

TEST_CASE("compare lists every algorithm against the bound") {
  const auto run = run_cli("compare data/table1.json");
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("pool: 10 orders, 80 rolls, demand width 6570 cm, lower bound 33 reels") !=
        std::string::npos);
  CHECK(run.out.find("coupling") != std::string::npos);
  CHECK(run.out.find("first-fit") != std::string::npos);
  CHECK(run.out.find("best-fit") != std::string::npos);
  CHECK(run.out.find("skipped") != std::string::npos);  // 80 rolls exceed the exact guard
}

TEST_CASE("trace goes to stderr, the report to stdout") {
  const auto run = run_cli("solve data/table1.json --trace");
  CHECK(run.exit_code == 0);
  CHECK(run.err.find("seed D4") != std::string::npos);
  CHECK(run.out.find("seed D4") == std::string::npos);
  CHECK(run.out.find("totals:") != std::string::npos);
}

TEST_CASE("exact solves a small pool end to end") {
  std::ofstream("/tmp/papercut_small.csv") << "id,width,count\nA,80,5\n";
  const auto run = run_cli("solve /tmp/papercut_small.csv --deckle-width 200 --algorithm exact");
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("totals: 3 reels") != std::string::npos);
  std::remove("/tmp/papercut_small.csv");
}
