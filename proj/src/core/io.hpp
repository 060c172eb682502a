#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "core/solvers.hpp"
#include "core/types.hpp"

namespace papercut {

enum class ReportFormat { Table, Json, Csv };

// Accepts "table", "csv", "json" and "structured" (alias of "json").
std::optional<ReportFormat> report_format_from_string(std::string_view text);

// CSV pools mirror the demand tables: header exactly `id,width,count` or
// `id,width,count,weight`, one order per row, LF or CRLF line ends. The
// deckle does not travel with the CSV and is supplied by the caller.
// Throws Error(Parse) with a line position for malformed text and
// Error(Semantic) naming the record for invariant violations.
OrderPool parse_pool_csv(std::string_view text, const DeckleSpec& deckle);

// JSON pool document with an embedded deckle block:
//   {"deckle": {"nominal_width": 201, "trim_allowance": 1, "unit": "cm"},
//    "orders": [{"id": "D1", "width": 55, "count": 6, "weight": 2035}, ...]}
// Unknown fields are errors. Widths may be written `55.0` style only when
// the fraction is zero.
OrderPool parse_pool_json(std::string_view text);

// A schedule document as parsed back from JSON. Stored totals and
// waste-per-reel figures are ignored; everything derivable is recomputed.
struct ParsedSchedule {
  std::string algorithm;
  std::vector<CutPattern> patterns;
};

// Accepts the documents render_report emits plus hand-written ones.
// Structural errors carry the offending path, e.g. `patterns[2].reels`.
// Order ids are not resolved here; validation reports unknown ones.
ParsedSchedule parse_schedule_json(std::string_view text);

// Rebuilds a full result (schedule + metrics) from a parsed document so it
// can be re-rendered or compared. Throws Error(BadArgument) for algorithm
// tags no solver owns or ids missing from the pool.
SolveResult result_from_parsed(const ParsedSchedule& parsed, const OrderPool& pool);

// All formats carry the same information. `table` is the human report
// (paired orders, reels, waste columns plus a totals footer), `csv` one
// pattern per row with a trailing totals comment, `json` the schedule
// document, canonically ordered so equal results render byte-identically.
std::string render_report(const SolveResult& result, const OrderPool& pool, ReportFormat format);

}  // namespace papercut
