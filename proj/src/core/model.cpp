#include "core/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace papercut {
namespace {

Count ceil_div(Length numerator, Length denominator) {
  return (numerator + denominator - 1) / denominator;
}

// Raw bound, no satisfiability check; shared by metrics and the public op.
Count raw_lower_bound(const OrderPool& pool) {
  const Length demand = total_demand_width(pool);
  if (demand == 0) return 0;
  return ceil_div(demand, pool.effective_width());
}

void check_pattern_shape(const CutPattern& pattern, std::size_t position) {
  const std::string where = "pattern #" + std::to_string(position + 1);
  if (pattern.composition.empty())
    throw Error(ErrorKind::Semantic, where + ": composition must not be empty");
  if (pattern.reels < 1)
    throw Error(ErrorKind::Semantic, where + ": reels must be >= 1, got " +
                                         std::to_string(pattern.reels));
  std::set<std::string_view> seen;
  for (const PatternEntry& entry : pattern.composition) {
    if (entry.multiplicity < 1)
      throw Error(ErrorKind::Semantic, where + ": multiplicity for " + entry.order_id +
                                           " must be >= 1, got " +
                                           std::to_string(entry.multiplicity));
    if (!seen.insert(entry.order_id).second)
      throw Error(ErrorKind::Semantic, where + ": order " + entry.order_id +
                                           " listed twice in one composition");
  }
}

Schedule expand_checked(const std::vector<CutPattern>& patterns, const OrderPool* pool) {
  Schedule schedule;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const CutPattern& pattern = patterns[p];
    check_pattern_shape(pattern, p);
    std::vector<SlotEntry> slot;
    slot.reserve(pattern.composition.size());
    for (const PatternEntry& entry : pattern.composition) {
      if (pool && !pool->index_of(entry.order_id))
        throw Error(ErrorKind::BadArgument, "pattern #" + std::to_string(p + 1) +
                                                " references unknown order " + entry.order_id);
      slot.push_back({entry.order_id, entry.multiplicity});
    }
    for (Count r = 0; r < pattern.reels; ++r) schedule.slots.push_back(slot);
  }
  return schedule;
}

}  // namespace

std::string_view to_string(Constraint constraint) {
  switch (constraint) {
    case Constraint::Capacity: return "capacity";
    case Constraint::NonEmptySlot: return "non-empty-slot";
    case Constraint::DemandExact: return "demand-exact";
  }
  return "unknown";
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  if (valid()) {
    out << "valid: all constraints hold\n";
    return out.str();
  }
  out << "INVALID: " << violations.size()
      << (violations.size() == 1 ? " violation\n" : " violations\n");
  for (const Violation& v : violations) {
    out << "  " << to_string(v.constraint);
    if (v.slot) out << " slot=" << (*v.slot + 1);
    if (!v.order_id.empty()) out << " order=" << v.order_id;
    out << " magnitude=" << v.magnitude << ": " << v.detail << "\n";
  }
  return out.str();
}

Length total_demand_width(const OrderPool& pool) {
  Length total = 0;
  for (const Order& order : pool.orders()) {
    Length product = 0;
    if (__builtin_mul_overflow(order.width, order.count, &product) ||
        __builtin_add_overflow(total, product, &total))
      throw Error(ErrorKind::Semantic, "demand width overflows 64-bit arithmetic");
  }
  return total;
}

void require_satisfiable(const OrderPool& pool) {
  if (const Order* order = pool.first_unsatisfiable())
    throw Error(ErrorKind::Unsatisfiable,
                "order " + order->id + " is " + std::to_string(order->width) + " " +
                    std::string(to_string(pool.deckle().unit)) + " wide but the usable reel is " +
                    std::to_string(pool.effective_width()));
}

Count lower_bound_reels(const OrderPool& pool) {
  require_satisfiable(pool);
  return raw_lower_bound(pool);
}

Length pattern_width(const CutPattern& pattern, const OrderPool& pool) {
  Length width = 0;
  for (const PatternEntry& entry : pattern.composition) {
    const auto index = pool.index_of(entry.order_id);
    if (!index)
      throw Error(ErrorKind::BadArgument, "pattern references unknown order " + entry.order_id);
    width += pool.order(*index).width * entry.multiplicity;
  }
  return width;
}

Length pattern_waste(const CutPattern& pattern, const OrderPool& pool) {
  return pool.effective_width() - pattern_width(pattern, pool);
}

ScheduleMetrics compute_metrics(const Schedule& schedule, const OrderPool& pool) {
  ScheduleMetrics metrics;
  metrics.demand_width = total_demand_width(pool);
  metrics.lower_bound_reels = raw_lower_bound(pool);
  metrics.used_reels = static_cast<Count>(schedule.slots.size());
  metrics.per_slot_waste.reserve(schedule.slots.size());
  const Length effective = pool.effective_width();
  for (const auto& slot : schedule.slots) {
    Length cut = 0;
    for (const SlotEntry& entry : slot) {
      if (const auto index = pool.index_of(entry.order_id))
        cut += pool.order(*index).width * entry.rolls;
    }
    const Length waste = effective - cut;
    metrics.per_slot_waste.push_back(waste);
    metrics.trim_loss += waste;
    if (waste > 0 && (!metrics.reusable_hint || waste > *metrics.reusable_hint))
      metrics.reusable_hint = waste;
  }
  return metrics;
}

ValidationReport validate_schedule(const Schedule& schedule, const OrderPool& pool) {
  ValidationReport report;
  const Length effective = pool.effective_width();
  const std::string unit(to_string(pool.deckle().unit));

  std::map<std::string, Count> scheduled;
  std::vector<std::string> unknown_ids;  // first-appearance order

  for (std::size_t i = 0; i < schedule.slots.size(); ++i) {
    const auto& slot = schedule.slots[i];
    if (slot.empty()) {
      report.violations.push_back(
          {Constraint::NonEmptySlot, i, "", 0, "slot cuts nothing"});
      continue;
    }
    Length cut = 0;
    for (const SlotEntry& entry : slot) {
      auto [it, inserted] = scheduled.emplace(entry.order_id, 0);
      it->second += entry.rolls;
      if (const auto index = pool.index_of(entry.order_id)) {
        cut += pool.order(*index).width * entry.rolls;
      } else if (inserted) {
        unknown_ids.push_back(entry.order_id);
      }
    }
    if (cut > effective)
      report.violations.push_back(
          {Constraint::Capacity, i, "", cut - effective,
           "slot cuts " + std::to_string(cut) + " " + unit + " on a " +
               std::to_string(effective) + " " + unit + " reel"});
  }

  for (const Order& order : pool.orders()) {
    const auto it = scheduled.find(order.id);
    const Count got = it == scheduled.end() ? 0 : it->second;
    if (got != order.count)
      report.violations.push_back(
          {Constraint::DemandExact, std::nullopt, order.id,
           got > order.count ? got - order.count : order.count - got,
           "scheduled " + std::to_string(got) + " of " + std::to_string(order.count) +
               " rolls"});
  }
  // An id the pool does not know has demand zero; any cut rolls exceed it.
  for (const std::string& id : unknown_ids)
    report.violations.push_back(
        {Constraint::DemandExact, std::nullopt, id, scheduled[id],
         "scheduled " + std::to_string(scheduled[id]) + " rolls of unknown order"});
  return report;
}

Schedule schedule_from_patterns(const std::vector<CutPattern>& patterns, const OrderPool& pool) {
  return expand_checked(patterns, &pool);
}

Schedule expand_patterns(const std::vector<CutPattern>& patterns) {
  return expand_checked(patterns, nullptr);
}

}  // namespace papercut
