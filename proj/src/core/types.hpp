#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace papercut {

// All lengths are integers in the pool's declared unit. Both bundled
// datasets are integral; keeping the arithmetic in integers makes every
// waste figure exact.
using Length = std::int64_t;
using Count = std::int64_t;

// Input caps so that width * count never overflows and sums stay checkable.
inline constexpr Length kMaxLength = 1'000'000'000;
inline constexpr Count kMaxCount = 1'000'000'000;

enum class ErrorKind {
  Io,            // unreadable input
  Parse,         // malformed text
  Semantic,      // well-formed but violates a model invariant
  BadArgument,   // unknown tag / bad handle use
  Unsatisfiable, // an order is wider than the usable reel
  TooLarge,      // instance exceeds the exact-search guard
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

enum class Unit { Cm, Mm };

std::string_view to_string(Unit unit);
std::optional<Unit> unit_from_string(std::string_view text);

// Usable width of a parent reel. Every computation runs on the effective
// width: nominal minus the trim allowance lost to the slitter edges.
struct DeckleSpec {
  Length nominal_width = 1;
  Length trim_allowance = 0;
  Unit unit = Unit::Cm;

  Length effective_width() const { return nominal_width - trim_allowance; }
  // Throws Error(Semantic) unless 0 <= trim_allowance < nominal_width.
  void check() const;
};

// One customer demand line: `count` rolls of `width`. Weight is inert
// metadata carried through for reporting.
struct Order {
  std::string id;
  Length width = 0;
  Count count = 0;
  std::optional<double> weight;
};

// The demand pool. Construction enforces positive widths, counts >= 1 and
// distinct ids; the original sequence is kept, it is the tie-break basis
// everywhere. An order wider than the effective width is accepted here and
// rejected by the solvers (the pool is unsatisfiable, not malformed).
class OrderPool {
 public:
  OrderPool();
  OrderPool(std::vector<Order> orders, DeckleSpec deckle);

  const std::vector<Order>& orders() const { return orders_; }
  const Order& order(std::size_t index) const { return orders_[index]; }
  const DeckleSpec& deckle() const { return deckle_; }
  Length effective_width() const { return deckle_.effective_width(); }

  std::optional<std::size_t> index_of(std::string_view id) const;
  Count total_rolls() const;
  const Order* first_unsatisfiable() const;

 private:
  std::vector<Order> orders_;
  DeckleSpec deckle_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

struct PatternEntry {
  std::string order_id;
  Count multiplicity = 0;

  friend bool operator==(const PatternEntry&, const PatternEntry&) = default;
};

// A reel layout: the listed rolls cut side by side from one reel, repeated
// over `reels` identical reels. Waste is never stored; it is recomputed
// from the composition against a pool.
struct CutPattern {
  std::vector<PatternEntry> composition;
  Count reels = 0;
};

// Compares compositions as multisets (entry order is display-only).
bool same_composition(const CutPattern& a, const CutPattern& b);

// Compact "D4:1+D3:2" form, used by traces and the CSV report.
std::string format_composition(const std::vector<PatternEntry>& composition);

struct SlotEntry {
  std::string order_id;
  Count rolls = 0;

  friend bool operator==(const SlotEntry&, const SlotEntry&) = default;
};

// One scheduled reel per slot. Presence of an entry encodes that the order
// is cut in the slot; there is no entry with zero rolls.
struct Schedule {
  std::vector<std::vector<SlotEntry>> slots;
};

}  // namespace papercut
