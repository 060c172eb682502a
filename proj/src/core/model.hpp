#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/types.hpp"

namespace papercut {

// Waste accounting for a schedule. For a demand-exact schedule the closed
// form holds: trim_loss == used_reels * effective_width - demand_width.
struct ScheduleMetrics {
  Length demand_width = 0;
  Count lower_bound_reels = 0;
  Count used_reels = 0;
  Length trim_loss = 0;
  // One residual per slot. A negative entry means the slot overflows the
  // reel; it is kept signed so validation can report the magnitude.
  std::vector<Length> per_slot_waste;
  // Widest leftover strip, when any slot leaves one. A wide residual can
  // still serve future orders instead of being scrapped.
  std::optional<Length> reusable_hint;
};

enum class Constraint { Capacity, NonEmptySlot, DemandExact };

std::string_view to_string(Constraint constraint);

struct Violation {
  Constraint constraint;
  std::optional<std::size_t> slot;  // capacity and non-empty-slot checks
  std::string order_id;             // demand-exact checks
  std::int64_t magnitude;           // overflow length or roll-count delta
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  std::string to_text() const;
};

// Throws Error(Unsatisfiable) when some order is wider than the usable
// reel; no schedule can ever cut such a pool.
void require_satisfiable(const OrderPool& pool);

// Sum of width * count over the pool; empty pools sum to zero.
Length total_demand_width(const OrderPool& pool);

// Ceiling of demand width over effective width. Throws
// Error(Unsatisfiable) when some order cannot fit any reel.
Count lower_bound_reels(const OrderPool& pool);

// Total width of one reel under the pattern. Unknown ids throw
// Error(BadArgument).
Length pattern_width(const CutPattern& pattern, const OrderPool& pool);
Length pattern_waste(const CutPattern& pattern, const OrderPool& pool);

// Fills every ScheduleMetrics field for the schedule. Ids missing from the
// pool contribute no width (validate_schedule reports them); negative slot
// residuals are preserved, never clamped.
ScheduleMetrics compute_metrics(const Schedule& schedule, const OrderPool& pool);

// Checks all model constraints and returns every violation found:
//   capacity        per slot, total cut width <= effective width
//   non-empty-slot  every slot cuts something
//   demand-exact    per order, scheduled rolls == ordered rolls, exactly
// Rolls scheduled for an id the pool does not know violate demand-exact
// against a demand of zero.
ValidationReport validate_schedule(const Schedule& schedule, const OrderPool& pool);

// Expands patterns into one slot per reel repetition, in pattern order.
// Rejects references to unknown order ids with Error(BadArgument) and
// malformed patterns (empty composition, reels < 1) with Error(Semantic).
Schedule schedule_from_patterns(const std::vector<CutPattern>& patterns, const OrderPool& pool);

// Same expansion without the pool membership check, for validating
// externally written schedule documents against an arbitrary pool.
Schedule expand_patterns(const std::vector<CutPattern>& patterns);

}  // namespace papercut
