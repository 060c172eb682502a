// papercut command line: solve, validate, bound and compare cutting
// schedules for jumbo-reel order pools. Talks to the solver library through
// its C interface only.

#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "papercut/papercut.h"

namespace {

// Exit codes are a stable contract: 0 success, 1 I/O or parse or usage
// errors, 2 validation found violations, 3 unsatisfiable pool.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnsatisfiable = 3;

int exit_code_for(papercut_status status) {
  if (status == PAPERCUT_OK) return kExitOk;
  if (status == PAPERCUT_ERR_UNSATISFIABLE) return kExitUnsatisfiable;
  return kExitError;
}

int complain(const std::string& message) {
  std::cerr << "papercut: " << message << "\n";
  return kExitError;
}

int complain_status(papercut_status status) {
  std::cerr << "papercut: " << papercut_last_error() << "\n";
  return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out, std::string& error) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    error = "cannot open " + path;
    return false;
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  if (stream.bad()) {
    error = "cannot read " + path;
    return false;
  }
  out = buffer.str();
  return true;
}

struct DeckleFlags {
  std::optional<std::int64_t> width;
  std::optional<std::int64_t> allowance;
  std::optional<std::string> unit;

  bool any() const { return width || allowance || unit; }
};

bool ends_with_ci(const std::string& text, const std::string& suffix) {
  if (text.size() < suffix.size()) return false;
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    const char a = text[text.size() - suffix.size() + i];
    const char b = suffix[i];
    if (std::tolower(static_cast<unsigned char>(a)) != b) return false;
  }
  return true;
}

bool looks_like_json(const std::string& path, const std::string& content) {
  if (ends_with_ci(path, ".json")) return true;
  if (ends_with_ci(path, ".csv")) return false;
  for (const char c : content) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{' || c == '[';
  }
  return false;
}

using PoolHandle = std::unique_ptr<papercut_pool, decltype(&papercut_pool_free)>;
using ResultHandle = std::unique_ptr<papercut_result, decltype(&papercut_result_free)>;
using PatternsHandle = std::unique_ptr<papercut_patterns, decltype(&papercut_patterns_free)>;

struct OwnedText {
  char* text = nullptr;
  ~OwnedText() { papercut_string_free(text); }
};

// Loads a pool from CSV (deckle supplied by flags) or JSON (deckle embedded;
// flags must stay unset). On failure prints a diagnostic and sets exit_code.
PoolHandle load_pool(const std::string& path, const DeckleFlags& deckle, int& exit_code) {
  std::string content, error;
  if (!read_file(path, content, error)) {
    exit_code = complain(error);
    return {nullptr, papercut_pool_free};
  }
  papercut_pool* pool = nullptr;
  papercut_status status = PAPERCUT_OK;
  if (looks_like_json(path, content)) {
    if (deckle.any()) {
      exit_code = complain("deckle flags only apply to CSV pools; " + path +
                           " carries its own deckle block");
      return {nullptr, papercut_pool_free};
    }
    status = papercut_pool_parse_json(content.data(), content.size(), &pool);
  } else {
    if (!deckle.width) {
      exit_code = complain("CSV pools carry no deckle; pass --deckle-width "
                           "(and optionally --trim-allowance, --unit)");
      return {nullptr, papercut_pool_free};
    }
    status = papercut_pool_parse_csv(content.data(), content.size(), *deckle.width,
                                     deckle.allowance.value_or(0),
                                     deckle.unit.value_or("cm").c_str(), &pool);
  }
  if (status != PAPERCUT_OK) {
    exit_code = complain_status(status);
    return {nullptr, papercut_pool_free};
  }
  exit_code = kExitOk;
  return {pool, papercut_pool_free};
}

int run_solve(const std::string& input, const DeckleFlags& deckle, const std::string& algorithm,
              const std::string& format, bool trace, std::int64_t budget) {
  int code = kExitOk;
  PoolHandle pool = load_pool(input, deckle, code);
  if (!pool) return code;

  papercut_result* raw = nullptr;
  const papercut_status status =
      algorithm == "exact" ? papercut_solve_exact(pool.get(), budget, &raw)
                           : papercut_solve(pool.get(), algorithm.c_str(), &raw);
  if (status != PAPERCUT_OK) return complain_status(status);
  ResultHandle result(raw, papercut_result_free);

  if (trace) {
    OwnedText text;
    if (papercut_result_trace(result.get(), &text.text) == PAPERCUT_OK)
      std::cerr << text.text;
  }
  OwnedText report;
  if (papercut_status s = papercut_result_render(result.get(), pool.get(), format.c_str(),
                                                 &report.text);
      s != PAPERCUT_OK)
    return complain_status(s);
  std::cout << report.text;
  return kExitOk;
}

int run_validate(const std::string& pool_path, const std::string& schedule_path,
                 const DeckleFlags& deckle) {
  int code = kExitOk;
  PoolHandle pool = load_pool(pool_path, deckle, code);
  if (!pool) return code;

  std::string content, error;
  if (!read_file(schedule_path, content, error)) return complain(error);
  papercut_patterns* raw = nullptr;
  if (papercut_status s = papercut_patterns_parse_json(content.data(), content.size(), &raw);
      s != PAPERCUT_OK)
    return complain_status(s);
  PatternsHandle patterns(raw, papercut_patterns_free);

  OwnedText report;
  int valid = 0;
  if (papercut_status s = papercut_validate(pool.get(), patterns.get(), &report.text, &valid);
      s != PAPERCUT_OK)
    return complain_status(s);
  std::cout << report.text;
  return valid ? kExitOk : kExitInvalid;
}

int run_bound(const std::string& input, const DeckleFlags& deckle) {
  int code = kExitOk;
  PoolHandle pool = load_pool(input, deckle, code);
  if (!pool) return code;
  std::int64_t bound = 0;
  if (papercut_status s = papercut_pool_lower_bound(pool.get(), &bound); s != PAPERCUT_OK)
    return complain_status(s);
  std::cout << "demand_width=" << papercut_pool_demand_width(pool.get())
            << " lower_bound=" << bound << "\n";
  return kExitOk;
}

int run_compare(const std::string& input, const DeckleFlags& deckle, std::int64_t budget) {
  int code = kExitOk;
  PoolHandle pool = load_pool(input, deckle, code);
  if (!pool) return code;
  std::int64_t bound = 0;
  if (papercut_status s = papercut_pool_lower_bound(pool.get(), &bound); s != PAPERCUT_OK)
    return complain_status(s);

  std::printf("pool: %lld orders, %lld rolls, demand width %lld %s, lower bound %lld reels\n",
              static_cast<long long>(papercut_pool_orders(pool.get())),
              static_cast<long long>(papercut_pool_rolls(pool.get())),
              static_cast<long long>(papercut_pool_demand_width(pool.get())),
              papercut_pool_unit(pool.get()), static_cast<long long>(bound));
  std::printf("%-12s %8s %12s %10s\n", "algorithm", "reels", "trim_loss", "time_ms");

  bool budget_note = false;
  for (const char* name : {"coupling", "first-fit", "best-fit", "exact"}) {
    papercut_result* raw = nullptr;
    const auto start = std::chrono::steady_clock::now();
    const papercut_status status =
        std::string_view(name) == "exact" ? papercut_solve_exact(pool.get(), budget, &raw)
                                          : papercut_solve(pool.get(), name, &raw);
    const auto stop = std::chrono::steady_clock::now();
    if (status == PAPERCUT_ERR_TOO_LARGE) {
      std::printf("%-12s %8s %12s %10s (skipped: %s)\n", name, "-", "-", "-",
                  papercut_last_error());
      continue;
    }
    if (status != PAPERCUT_OK) return complain_status(status);
    ResultHandle result(raw, papercut_result_free);
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    const bool proven = papercut_result_proven(result.get()) != 0;
    if (!proven) budget_note = true;
    const std::string label = proven ? name : std::string(name) + "*";
    std::printf("%-12s %8lld %12lld %10.2f\n", label.c_str(),
                static_cast<long long>(papercut_result_reels(result.get())),
                static_cast<long long>(papercut_result_trim_loss(result.get())), ms);
  }
  if (budget_note) std::printf("* node budget exhausted; best incumbent shown, not proven\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cutting schedules for jumbo-reel order pools"};
  app.require_subcommand(1);

  DeckleFlags deckle;
  std::string input, schedule_path;
  std::string algorithm = "coupling";
  std::string format = "table";
  bool trace = false;
  std::int64_t budget = 5'000'000;

  auto add_deckle_flags = [&](CLI::App* cmd) {
    cmd->add_option("--deckle-width", deckle.width,
                    "nominal reel width (CSV pools only)");
    cmd->add_option("--trim-allowance", deckle.allowance,
                    "width lost to the slitter, default 0 (CSV pools only)");
    cmd->add_option("--unit", deckle.unit, "length unit, cm or mm, default cm (CSV pools only)")
        ->check(CLI::IsMember({"cm", "mm"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "pack an order pool onto reels");
  solve->add_option("input", input, "pool file (.csv or .json)")->required();
  solve->add_option("--algorithm", algorithm, "coupling, first-fit, best-fit or exact")
      ->check(CLI::IsMember({"coupling", "first-fit", "best-fit", "exact"}));
  solve->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json", "structured"}));
  solve->add_flag("--trace", trace, "print construction steps to stderr");
  solve->add_option("--budget", budget, "node budget for --algorithm exact");
  add_deckle_flags(solve);

  CLI::App* validate = app.add_subcommand("validate", "check a schedule document against a pool");
  validate->add_option("pool", input, "pool file (.csv or .json)")->required();
  validate->add_option("schedule", schedule_path, "schedule document (.json)")->required();
  add_deckle_flags(validate);

  CLI::App* bound = app.add_subcommand("bound", "print demand width and the reel lower bound");
  bound->add_option("input", input, "pool file (.csv or .json)")->required();
  add_deckle_flags(bound);

  CLI::App* compare = app.add_subcommand("compare", "run every algorithm on one pool");
  compare->add_option("input", input, "pool file (.csv or .json)")->required();
  compare->add_option("--budget", budget, "node budget for the exact row");
  add_deckle_flags(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve->parsed()) return run_solve(input, deckle, algorithm, format, trace, budget);
    if (validate->parsed()) return run_validate(input, schedule_path, deckle);
    if (bound->parsed()) return run_bound(input, deckle);
    if (compare->parsed()) return run_compare(input, deckle, budget);
  } catch (const std::exception& e) {
    return complain(e.what());
  }
  return complain("no subcommand given");
}
