// C binding for the papercut core. Handles wrap the C++ value types; every
// entry point catches and converts exceptions, so no exception ever crosses
// the library boundary.

#include "papercut/papercut.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/io.hpp"
#include "core/model.hpp"
#include "core/solvers.hpp"
#include "core/types.hpp"

struct papercut_pool {
  papercut::OrderPool pool;
};

struct papercut_result {
  papercut::SolveResult result;
};

struct papercut_patterns {
  papercut::ParsedSchedule parsed;
};

namespace {

thread_local std::string t_last_error;

papercut_status fail(papercut_status status, std::string message) {
  t_last_error = std::move(message);
  return status;
}

papercut_status from_error(const papercut::Error& error) {
  using papercut::ErrorKind;
  switch (error.kind()) {
    case ErrorKind::Io: return fail(PAPERCUT_ERR_IO, error.what());
    case ErrorKind::Parse: return fail(PAPERCUT_ERR_PARSE, error.what());
    case ErrorKind::Semantic: return fail(PAPERCUT_ERR_SEMANTIC, error.what());
    case ErrorKind::BadArgument: return fail(PAPERCUT_ERR_BAD_ARGUMENT, error.what());
    case ErrorKind::Unsatisfiable: return fail(PAPERCUT_ERR_UNSATISFIABLE, error.what());
    case ErrorKind::TooLarge: return fail(PAPERCUT_ERR_TOO_LARGE, error.what());
  }
  return fail(PAPERCUT_ERR_INTERNAL, error.what());
}

template <typename Fn>
papercut_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const papercut::Error& error) {
    return from_error(error);
  } catch (const std::exception& error) {
    return fail(PAPERCUT_ERR_INTERNAL, error.what());
  } catch (...) {
    return fail(PAPERCUT_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& text) {
  char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
  if (!buffer) throw std::bad_alloc();
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return buffer;
}

papercut_status require(bool ok, const char* message) {
  return ok ? PAPERCUT_OK : fail(PAPERCUT_ERR_BAD_ARGUMENT, message);
}

}  // namespace

extern "C" {

const char* papercut_last_error(void) { return t_last_error.c_str(); }

papercut_status papercut_pool_parse_csv(const char* text, size_t length,
                                        int64_t nominal_width, int64_t trim_allowance,
                                        const char* unit, papercut_pool** out_pool) {
  if (papercut_status s = require(text && unit && out_pool, "null argument"); s) return s;
  return guarded([&] {
    const auto parsed_unit = papercut::unit_from_string(unit);
    if (!parsed_unit)
      throw papercut::Error(papercut::ErrorKind::BadArgument,
                            std::string("unit must be \"cm\" or \"mm\", got \"") + unit + "\"");
    papercut::DeckleSpec deckle{nominal_width, trim_allowance, *parsed_unit};
    auto pool = papercut::parse_pool_csv(std::string_view(text, length), deckle);
    *out_pool = new papercut_pool{std::move(pool)};
    return PAPERCUT_OK;
  });
}

papercut_status papercut_pool_parse_json(const char* text, size_t length,
                                         papercut_pool** out_pool) {
  if (papercut_status s = require(text && out_pool, "null argument"); s) return s;
  return guarded([&] {
    auto pool = papercut::parse_pool_json(std::string_view(text, length));
    *out_pool = new papercut_pool{std::move(pool)};
    return PAPERCUT_OK;
  });
}

void papercut_pool_free(papercut_pool* pool) { delete pool; }

int64_t papercut_pool_orders(const papercut_pool* pool) {
  return pool ? static_cast<int64_t>(pool->pool.orders().size()) : 0;
}

int64_t papercut_pool_rolls(const papercut_pool* pool) {
  return pool ? pool->pool.total_rolls() : 0;
}

int64_t papercut_pool_demand_width(const papercut_pool* pool) {
  return pool ? papercut::total_demand_width(pool->pool) : 0;
}

int64_t papercut_pool_effective_width(const papercut_pool* pool) {
  return pool ? pool->pool.effective_width() : 0;
}

const char* papercut_pool_unit(const papercut_pool* pool) {
  if (!pool) return "";
  return papercut::to_string(pool->pool.deckle().unit).data();
}

papercut_status papercut_pool_lower_bound(const papercut_pool* pool, int64_t* out_reels) {
  if (papercut_status s = require(pool && out_reels, "null argument"); s) return s;
  return guarded([&] {
    *out_reels = papercut::lower_bound_reels(pool->pool);
    return PAPERCUT_OK;
  });
}

papercut_status papercut_solve(const papercut_pool* pool, const char* algorithm,
                               papercut_result** out_result) {
  if (papercut_status s = require(pool && algorithm && out_result, "null argument"); s) return s;
  return guarded([&] {
    const auto tag = papercut::algorithm_from_string(algorithm);
    if (!tag)
      throw papercut::Error(papercut::ErrorKind::BadArgument,
                            std::string("unknown algorithm \"") + algorithm +
                                "\" (expected coupling, first-fit, best-fit or exact)");
    papercut::SolveResult result;
    switch (*tag) {
      case papercut::Algorithm::Coupling: result = papercut::couple_orders(pool->pool); break;
      case papercut::Algorithm::FirstFit: result = papercut::first_fit(pool->pool); break;
      case papercut::Algorithm::BestFit: result = papercut::best_fit(pool->pool); break;
      case papercut::Algorithm::Exact: result = papercut::exact_min_reels(pool->pool); break;
    }
    *out_result = new papercut_result{std::move(result)};
    return PAPERCUT_OK;
  });
}

papercut_status papercut_solve_exact(const papercut_pool* pool, int64_t node_budget,
                                     papercut_result** out_result) {
  if (papercut_status s = require(pool && out_result, "null argument"); s) return s;
  return guarded([&] {
    *out_result = new papercut_result{papercut::exact_min_reels(pool->pool, node_budget)};
    return PAPERCUT_OK;
  });
}

void papercut_result_free(papercut_result* result) { delete result; }

int64_t papercut_result_reels(const papercut_result* result) {
  return result ? result->result.metrics.used_reels : 0;
}

int64_t papercut_result_trim_loss(const papercut_result* result) {
  return result ? result->result.metrics.trim_loss : 0;
}

int papercut_result_proven(const papercut_result* result) {
  return result && result->result.proven ? 1 : 0;
}

papercut_status papercut_result_render(const papercut_result* result, const papercut_pool* pool,
                                       const char* format, char** out_text) {
  if (papercut_status s = require(result && pool && format && out_text, "null argument"); s)
    return s;
  return guarded([&] {
    const auto parsed = papercut::report_format_from_string(format);
    if (!parsed)
      throw papercut::Error(papercut::ErrorKind::BadArgument,
                            std::string("unknown format \"") + format +
                                "\" (expected table, csv or json)");
    *out_text = copy_string(papercut::render_report(result->result, pool->pool, *parsed));
    return PAPERCUT_OK;
  });
}

papercut_status papercut_result_trace(const papercut_result* result, char** out_text) {
  if (papercut_status s = require(result && out_text, "null argument"); s) return s;
  return guarded([&] {
    std::string text;
    for (const std::string& line : result->result.trace) {
      text += line;
      text += '\n';
    }
    *out_text = copy_string(text);
    return PAPERCUT_OK;
  });
}

papercut_status papercut_patterns_parse_json(const char* text, size_t length,
                                             papercut_patterns** out_patterns) {
  if (papercut_status s = require(text && out_patterns, "null argument"); s) return s;
  return guarded([&] {
    *out_patterns =
        new papercut_patterns{papercut::parse_schedule_json(std::string_view(text, length))};
    return PAPERCUT_OK;
  });
}

void papercut_patterns_free(papercut_patterns* patterns) { delete patterns; }

papercut_status papercut_validate(const papercut_pool* pool, const papercut_patterns* patterns,
                                  char** out_report, int* out_valid) {
  if (papercut_status s = require(pool && patterns && out_report && out_valid, "null argument"); s)
    return s;
  return guarded([&] {
    const papercut::Schedule schedule = papercut::expand_patterns(patterns->parsed.patterns);
    const papercut::ValidationReport report = papercut::validate_schedule(schedule, pool->pool);
    *out_report = copy_string(report.to_text());
    *out_valid = report.valid() ? 1 : 0;
    return PAPERCUT_OK;
  });
}

void papercut_string_free(char* text) { std::free(text); }

}  // extern "C"
