#include "core/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace papercut {
namespace {

struct LiveOrder {
  std::size_t order_index;
  Length width;
  Count remaining;
};

void sort_by_width(std::vector<LiveOrder>& entries) {
  std::sort(entries.begin(), entries.end(), [](const LiveOrder& a, const LiveOrder& b) {
    if (a.width != b.width) return a.width > b.width;
    return a.order_index < b.order_index;
  });
}

std::vector<LiveOrder> to_live(const std::vector<ClassifiedEntry>& entries,
                               const OrderPool& pool) {
  std::vector<LiveOrder> live;
  live.reserve(entries.size());
  for (const ClassifiedEntry& entry : entries)
    if (entry.remaining > 0)
      live.push_back({entry.order_index, pool.order(entry.order_index).width, entry.remaining});
  sort_by_width(live);
  return live;
}

// Entries of one pattern while it is being built: pool index -> multiplicity,
// in seed-then-fill order.
using Composition = std::vector<std::pair<std::size_t, Count>>;

Count multiplicity_of(const Composition& composition, std::size_t order_index) {
  for (const auto& [index, mult] : composition)
    if (index == order_index) return mult;
  return 0;
}

CutPattern to_pattern(const Composition& composition, Count reels, const OrderPool& pool) {
  CutPattern pattern;
  pattern.reels = reels;
  pattern.composition.reserve(composition.size());
  for (const auto& [index, mult] : composition)
    pattern.composition.push_back({pool.order(index).id, mult});
  return pattern;
}

void finalize(SolveResult& result, const OrderPool& pool) {
  result.schedule = schedule_from_patterns(result.patterns, pool);
  result.metrics = compute_metrics(result.schedule, pool);
}

// ---- packing baselines ----------------------------------------------------

struct OpenReel {
  Length residual;
  Composition content;  // arrival order
};

void add_roll(OpenReel& reel, std::size_t order_index, Length width) {
  reel.residual -= width;
  for (auto& [index, rolls] : reel.content) {
    if (index == order_index) {
      ++rolls;
      return;
    }
  }
  reel.content.push_back({order_index, 1});
}

// Canonical slot content: width-descending, pool position on ties. Keeps
// reel comparisons and the rendered rows deterministic.
Composition canonical(const Composition& content, const OrderPool& pool) {
  Composition sorted = content;
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    const Length wa = pool.order(a.first).width;
    const Length wb = pool.order(b.first).width;
    if (wa != wb) return wa > wb;
    return a.first < b.first;
  });
  return sorted;
}

// Run-length encodes a reel sequence into patterns without reordering it,
// so expanding the patterns reproduces the slots exactly.
std::vector<CutPattern> patterns_from_reels(const std::vector<Composition>& reels,
                                            const OrderPool& pool) {
  std::vector<CutPattern> patterns;
  for (const Composition& content : reels) {
    if (!patterns.empty() &&
        same_composition(patterns.back(), to_pattern(content, 1, pool)))
      ++patterns.back().reels;
    else
      patterns.push_back(to_pattern(content, 1, pool));
  }
  return patterns;
}

SolveResult pack_rolls(const OrderPool& pool, Algorithm algorithm) {
  require_satisfiable(pool);
  SolveResult result;
  result.algorithm = algorithm;
  const Length effective = pool.effective_width();

  std::vector<OpenReel> reels;
  for (std::size_t i = 0; i < pool.orders().size(); ++i) {
    const Order& order = pool.order(i);
    for (Count roll = 0; roll < order.count; ++roll) {
      std::size_t target = reels.size();
      if (algorithm == Algorithm::FirstFit) {
        for (std::size_t r = 0; r < reels.size(); ++r) {
          if (reels[r].residual >= order.width) {
            target = r;
            break;
          }
        }
      } else {
        for (std::size_t r = 0; r < reels.size(); ++r) {
          if (reels[r].residual >= order.width &&
              (target == reels.size() || reels[r].residual < reels[target].residual))
            target = r;
        }
      }
      if (target == reels.size()) reels.push_back({effective, {}});
      add_roll(reels[target], i, order.width);
      result.trace.push_back("roll " + order.id + " width=" + std::to_string(order.width) +
                             " -> reel " + std::to_string(target + 1) + " residual=" +
                             std::to_string(reels[target].residual));
    }
  }

  std::vector<Composition> contents;
  contents.reserve(reels.size());
  for (const OpenReel& reel : reels) contents.push_back(canonical(reel.content, pool));
  result.patterns = patterns_from_reels(contents, pool);
  finalize(result, pool);
  return result;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Coupling: return "coupling";
    case Algorithm::FirstFit: return "first-fit";
    case Algorithm::BestFit: return "best-fit";
    case Algorithm::Exact: return "exact";
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_string(std::string_view text) {
  if (text == "coupling") return Algorithm::Coupling;
  if (text == "first-fit") return Algorithm::FirstFit;
  if (text == "best-fit") return Algorithm::BestFit;
  if (text == "exact") return Algorithm::Exact;
  return std::nullopt;
}

ClassifiedPool classify_pool(const OrderPool& pool) {
  ClassifiedPool classified;
  const Length effective = pool.effective_width();
  std::vector<LiveOrder> wide, narrow;
  for (std::size_t i = 0; i < pool.orders().size(); ++i) {
    const Order& order = pool.order(i);
    // strictly wider than half; an exact half-width order is narrow
    auto& bucket = 2 * order.width > effective ? wide : narrow;
    bucket.push_back({i, order.width, order.count});
  }
  sort_by_width(wide);
  sort_by_width(narrow);
  for (const LiveOrder& entry : wide) classified.wide.push_back({entry.order_index, entry.remaining});
  for (const LiveOrder& entry : narrow)
    classified.narrow.push_back({entry.order_index, entry.remaining});
  return classified;
}

SolveResult couple_orders(const OrderPool& pool) {
  return couple_orders(pool, classify_pool(pool));
}

SolveResult couple_orders(const OrderPool& pool, ClassifiedPool classified) {
  require_satisfiable(pool);
  SolveResult result;
  result.algorithm = Algorithm::Coupling;
  const Length effective = pool.effective_width();

  std::vector<LiveOrder> wide = to_live(classified.wide, pool);
  std::vector<LiveOrder> narrow = to_live(classified.narrow, pool);

  auto find_live = [&](std::size_t order_index) -> LiveOrder& {
    for (LiveOrder& entry : wide)
      if (entry.order_index == order_index) return entry;
    for (LiveOrder& entry : narrow)
      if (entry.order_index == order_index) return entry;
    throw Error(ErrorKind::BadArgument, "order index not live");
  };

  while (!wide.empty() || !narrow.empty()) {
    // Seed from the wide side while it lasts; fill from the narrow side
    // while it lasts. Whichever side survives alone both seeds and fills.
    std::vector<LiveOrder>& seed_pool = !wide.empty() ? wide : narrow;
    std::vector<LiveOrder>& fill_pool = !narrow.empty() ? narrow : wide;

    const LiveOrder seed = seed_pool.front();
    Composition composition{{seed.order_index, 1}};
    Length residual = effective - seed.width;
    result.trace.push_back("seed " + pool.order(seed.order_index).id +
                           " width=" + std::to_string(seed.width) +
                           " residual=" + std::to_string(residual));

    // Repeatedly add the narrow order that wastes least when cut as many
    // times as the residual (and its remaining count) admits. The fill
    // pool is width-descending, so on equal waste the wider order and then
    // the earlier pool position win.
    while (true) {
      const LiveOrder* best = nullptr;
      Count best_copies = 0;
      Length best_waste = 0;
      for (const LiveOrder& candidate : fill_pool) {
        const Count available = candidate.remaining - multiplicity_of(composition, candidate.order_index);
        if (available <= 0 || candidate.width > residual) continue;
        const Count copies = std::min<Count>(available, residual / candidate.width);
        const Length waste = residual - copies * candidate.width;
        if (!best || waste < best_waste) {
          best = &candidate;
          best_copies = copies;
          best_waste = waste;
        }
      }
      if (!best) break;
      bool merged = false;
      for (auto& [index, mult] : composition) {
        if (index == best->order_index) {
          mult += best_copies;
          merged = true;
          break;
        }
      }
      if (!merged) composition.push_back({best->order_index, best_copies});
      residual -= best_copies * best->width;
      result.trace.push_back("fill " + pool.order(best->order_index).id + " x" +
                             std::to_string(best_copies) + " width=" +
                             std::to_string(best->width) + " residual=" +
                             std::to_string(residual));
    }

    Count reels = 0;
    for (const auto& [index, mult] : composition) {
      const Count cap = find_live(index).remaining / mult;
      reels = reels == 0 ? cap : std::min(reels, cap);
    }
    result.patterns.push_back(to_pattern(composition, reels, pool));
    result.trace.push_back("pattern " + format_composition(result.patterns.back().composition) +
                           " reels=" + std::to_string(reels) + " waste=" +
                           std::to_string(residual));

    for (const auto& [index, mult] : composition) find_live(index).remaining -= reels * mult;
    auto drained = [](const LiveOrder& entry) { return entry.remaining == 0; };
    std::erase_if(wide, drained);
    std::erase_if(narrow, drained);
  }

  finalize(result, pool);
  return result;
}

SolveResult first_fit(const OrderPool& pool) { return pack_rolls(pool, Algorithm::FirstFit); }

SolveResult best_fit(const OrderPool& pool) { return pack_rolls(pool, Algorithm::BestFit); }

namespace {

struct Roll {
  std::size_t order_index;
  Length width;
};

// DFS over roll-to-reel assignments. Two symmetry breaks keep the tree
// small: a roll may only open the next fresh reel (reels carry no
// identity), and rolls of one order are placed in non-decreasing reel
// order (they carry no identity either).
class ExactSearch {
 public:
  ExactSearch(std::vector<Roll> rolls, Length effective, std::size_t order_count,
              std::int64_t budget)
      : rolls_(std::move(rolls)),
        effective_(effective),
        budget_(budget),
        last_reel_(order_count, -1),
        assignment_(rolls_.size(), 0) {}

  // Seeds the incumbent, then searches. Returns false when the budget ran
  // out before the tree (or the lower-bound proof) was exhausted.
  bool run(Count global_lower_bound) {
    seed_incumbent();
    global_lower_bound_ = global_lower_bound;
    if (best_count_ == global_lower_bound_ || rolls_.empty()) return true;
    aborted_ = false;
    descend(0, 0);
    return !aborted_;
  }

  Count best_count() const { return best_count_; }
  const std::vector<int>& best_assignment() const { return best_assignment_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  void seed_incumbent() {
    // first-fit over width-descending rolls; a decent upper bound to prune
    // against and the incumbent reported when the budget dies early
    std::vector<Length> residual;
    best_assignment_.resize(rolls_.size());
    for (std::size_t k = 0; k < rolls_.size(); ++k) {
      std::size_t target = residual.size();
      for (std::size_t r = 0; r < residual.size(); ++r) {
        if (residual[r] >= rolls_[k].width) {
          target = r;
          break;
        }
      }
      if (target == residual.size()) residual.push_back(effective_);
      residual[target] -= rolls_[k].width;
      best_assignment_[k] = static_cast<int>(target);
    }
    best_count_ = static_cast<Count>(residual.size());
  }

  // returns true to stop the whole search (optimum proven or budget gone)
  bool descend(std::size_t k, std::size_t used) {
    if (nodes_ >= budget_) {
      aborted_ = true;
      return true;
    }
    ++nodes_;
    if (static_cast<Count>(used) >= best_count_) return false;
    if (k == rolls_.size()) {
      best_count_ = static_cast<Count>(used);
      best_assignment_ = assignment_;
      return best_count_ == global_lower_bound_;
    }
    const Roll& roll = rolls_[k];
    const int start = std::max(last_reel_[roll.order_index], 0);
    for (int r = start; r < static_cast<int>(used); ++r) {
      if (residual_[r] < roll.width) continue;
      residual_[r] -= roll.width;
      assignment_[k] = r;
      const int previous = last_reel_[roll.order_index];
      last_reel_[roll.order_index] = r;
      if (descend(k + 1, used)) return true;
      last_reel_[roll.order_index] = previous;
      residual_[r] += roll.width;
    }
    if (static_cast<Count>(used) + 1 < best_count_) {
      residual_.push_back(effective_ - roll.width);
      assignment_[k] = static_cast<int>(used);
      const int previous = last_reel_[roll.order_index];
      last_reel_[roll.order_index] = static_cast<int>(used);
      if (descend(k + 1, used + 1)) return true;
      last_reel_[roll.order_index] = previous;
      residual_.pop_back();
    }
    return false;
  }

  std::vector<Roll> rolls_;
  Length effective_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  Count global_lower_bound_ = 0;
  Count best_count_ = 0;
  std::vector<int> best_assignment_;
  std::vector<Length> residual_;
  std::vector<int> last_reel_;
  std::vector<int> assignment_;
};

}  // namespace

SolveResult exact_min_reels(const OrderPool& pool, std::int64_t node_budget) {
  require_satisfiable(pool);
  if (node_budget <= 0)
    throw Error(ErrorKind::BadArgument, "node budget must be positive");
  const Count total_rolls = pool.total_rolls();
  if (total_rolls > kExactRollGuard)
    throw Error(ErrorKind::TooLarge,
                "instance has " + std::to_string(total_rolls) +
                    " rolls; exact search is guarded to " + std::to_string(kExactRollGuard));

  std::vector<Roll> rolls;
  rolls.reserve(static_cast<std::size_t>(total_rolls));
  for (std::size_t i = 0; i < pool.orders().size(); ++i)
    for (Count c = 0; c < pool.order(i).count; ++c) rolls.push_back({i, pool.order(i).width});
  std::sort(rolls.begin(), rolls.end(), [](const Roll& a, const Roll& b) {
    if (a.width != b.width) return a.width > b.width;
    return a.order_index < b.order_index;
  });

  SolveResult result;
  result.algorithm = Algorithm::Exact;
  result.trace.push_back("exact search over " + std::to_string(total_rolls) +
                         " rolls, node budget " + std::to_string(node_budget));

  ExactSearch search(rolls, pool.effective_width(), pool.orders().size(), node_budget);
  result.proven = search.run(lower_bound_reels(pool));
  result.trace.push_back(std::string(result.proven ? "proved optimal at " : "budget exhausted; best incumbent ") +
                         std::to_string(search.best_count()) + " reels after " +
                         std::to_string(search.nodes()) + " nodes");

  // Rebuild slots from the assignment, order them canonically, then
  // run-length encode into patterns.
  std::vector<Composition> contents(static_cast<std::size_t>(search.best_count()));
  for (std::size_t k = 0; k < rolls.size(); ++k) {
    Composition& slot = contents[static_cast<std::size_t>(search.best_assignment()[k])];
    bool merged = false;
    for (auto& [index, count] : slot) {
      if (index == rolls[k].order_index) {
        ++count;
        merged = true;
        break;
      }
    }
    if (!merged) slot.push_back({rolls[k].order_index, 1});
  }
  for (Composition& slot : contents) slot = canonical(slot, pool);
  std::sort(contents.begin(), contents.end());
  result.patterns = patterns_from_reels(contents, pool);
  finalize(result, pool);
  return result;
}

}  // namespace papercut
