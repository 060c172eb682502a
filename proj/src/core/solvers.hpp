#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/model.hpp"
#include "core/types.hpp"

namespace papercut {

enum class Algorithm { Coupling, FirstFit, BestFit, Exact };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_string(std::string_view text);

struct ClassifiedEntry {
  std::size_t order_index;
  Count remaining;
};

// The pool split at half the effective width. Two strictly-wide orders can
// never share a reel, so a pattern holds at most one wide order; narrow
// orders may repeat within a pattern. Orders at exactly half width count as
// narrow. Both lists are width-descending with the original pool position
// breaking ties.
struct ClassifiedPool {
  std::vector<ClassifiedEntry> wide;
  std::vector<ClassifiedEntry> narrow;
};

struct SolveResult {
  Algorithm algorithm = Algorithm::Coupling;
  std::vector<CutPattern> patterns;  // construction order
  Schedule schedule;                 // always schedule_from_patterns(patterns)
  ScheduleMetrics metrics;
  std::vector<std::string> trace;    // human-readable construction steps
  bool proven = true;                // exact search: false when the budget ran out
};

ClassifiedPool classify_pool(const OrderPool& pool);

// The wide/narrow coupling heuristic. Seeds each pattern with the widest
// remaining wide order and fills the residual with the narrow order that
// wastes least when repeated as often as it fits; once one side of the pool
// runs dry the same loop finishes within the remaining side. Ties break by
// width, then by pool position. The result is demand-exact and
// capacity-feasible. Throws Error(Unsatisfiable) when an order cannot fit
// any reel.
SolveResult couple_orders(const OrderPool& pool);

// Same loop under a caller-supplied classification, for studying how the
// half-width boundary placement affects the outcome.
SolveResult couple_orders(const OrderPool& pool, ClassifiedPool classified);

// Baseline packers. Rolls are processed one at a time in pool order; each
// roll goes to the lowest-indexed open reel that fits (first-fit) or to the
// open reel with the smallest sufficient residual, lowest index on ties
// (best-fit). A new reel opens when nothing fits.
SolveResult first_fit(const OrderPool& pool);
SolveResult best_fit(const OrderPool& pool);

// Exhaustive search is factorial; keep it to instances where it is instant.
inline constexpr Count kExactRollGuard = 12;
inline constexpr std::int64_t kExactDefaultNodeBudget = 5'000'000;

// Provably minimal reel count by depth-first search over roll-to-reel
// assignments with symmetry breaking (reels are interchangeable, rolls of
// one order are interchangeable). Demand-exact schedules pin trim loss to
// the reel count, so minimizing reels minimizes waste. Throws
// Error(TooLarge) beyond kExactRollGuard total rolls; when `node_budget`
// runs out the best incumbent is returned with proven == false.
SolveResult exact_min_reels(const OrderPool& pool,
                            std::int64_t node_budget = kExactDefaultNodeBudget);

}  // namespace papercut
