#include "core/types.hpp"

#include <algorithm>
#include <utility>

namespace papercut {

std::string_view to_string(Unit unit) {
  return unit == Unit::Cm ? "cm" : "mm";
}

std::optional<Unit> unit_from_string(std::string_view text) {
  if (text == "cm") return Unit::Cm;
  if (text == "mm") return Unit::Mm;
  return std::nullopt;
}

void DeckleSpec::check() const {
  if (nominal_width <= 0 || nominal_width > kMaxLength)
    throw Error(ErrorKind::Semantic, "deckle nominal width must be in [1, " +
                                         std::to_string(kMaxLength) + "], got " +
                                         std::to_string(nominal_width));
  if (trim_allowance < 0)
    throw Error(ErrorKind::Semantic, "trim allowance must be non-negative, got " +
                                         std::to_string(trim_allowance));
  if (trim_allowance >= nominal_width)
    throw Error(ErrorKind::Semantic,
                "trim allowance " + std::to_string(trim_allowance) +
                    " leaves no usable width on a " + std::to_string(nominal_width) +
                    " deckle");
}

OrderPool::OrderPool() : deckle_{1, 0, Unit::Cm} {}

OrderPool::OrderPool(std::vector<Order> orders, DeckleSpec deckle)
    : orders_(std::move(orders)), deckle_(deckle) {
  deckle_.check();
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const Order& order = orders_[i];
    if (order.id.empty())
      throw Error(ErrorKind::Semantic, "order #" + std::to_string(i + 1) + " has an empty id");
    if (order.width <= 0 || order.width > kMaxLength)
      throw Error(ErrorKind::Semantic, "order " + order.id + ": width must be in [1, " +
                                           std::to_string(kMaxLength) + "], got " +
                                           std::to_string(order.width));
    if (order.count < 1 || order.count > kMaxCount)
      throw Error(ErrorKind::Semantic, "order " + order.id + ": count must be in [1, " +
                                           std::to_string(kMaxCount) + "], got " +
                                           std::to_string(order.count));
    if (order.weight && (*order.weight < 0.0 || !(*order.weight == *order.weight)))
      throw Error(ErrorKind::Semantic, "order " + order.id + ": weight must be non-negative");
    if (!index_.emplace(order.id, i).second)
      throw Error(ErrorKind::Semantic, "duplicate order id " + order.id);
  }
}

std::optional<std::size_t> OrderPool::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Count OrderPool::total_rolls() const {
  Count total = 0;
  for (const Order& order : orders_) total += order.count;
  return total;
}

const Order* OrderPool::first_unsatisfiable() const {
  const Length limit = effective_width();
  for (const Order& order : orders_)
    if (order.width > limit) return &order;
  return nullptr;
}

std::string format_composition(const std::vector<PatternEntry>& composition) {
  std::string text;
  for (const PatternEntry& entry : composition) {
    if (!text.empty()) text += '+';
    text += entry.order_id;
    text += ':';
    text += std::to_string(entry.multiplicity);
  }
  return text;
}

bool same_composition(const CutPattern& a, const CutPattern& b) {
  auto canon = [](const CutPattern& p) {
    std::vector<PatternEntry> entries = p.composition;
    std::sort(entries.begin(), entries.end(), [](const PatternEntry& x, const PatternEntry& y) {
      return x.order_id < y.order_id;
    });
    return entries;
  };
  return canon(a) == canon(b);
}

}  // namespace papercut
