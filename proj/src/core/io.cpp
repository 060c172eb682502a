#include "core/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"

namespace papercut {
namespace {

using nlohmann::json;

// ---- shared field parsing ---------------------------------------------------

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

// Plain decimal integer; a fractional part is tolerated only when zero
// (demand tables are often exported as `55.0`).
std::int64_t parse_integer(std::string_view text, const std::string& where) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::Parse, where + ": empty number");
  std::int64_t value = 0;
  auto [rest, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc())
    throw Error(ErrorKind::Parse, where + ": not a number: \"" + std::string(text) + "\"");
  std::string_view tail(rest, static_cast<std::size_t>(text.data() + text.size() - rest));
  if (!tail.empty()) {
    if (tail.front() != '.' || tail.size() < 2 ||
        tail.find_first_not_of('0', 1) != std::string_view::npos)
      throw Error(ErrorKind::Parse,
                  where + ": not an integer: \"" + std::string(text) + "\"");
  }
  return value;
}

std::int64_t check_range(std::int64_t value, std::int64_t min, std::int64_t max,
                         const std::string& where) {
  if (value < min || value > max)
    throw Error(ErrorKind::Semantic, where + ": must be in [" + std::to_string(min) + ", " +
                                         std::to_string(max) + "], got " + std::to_string(value));
  return value;
}

double parse_weight(std::string_view text, const std::string& where) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::Parse, where + ": empty number");
  double value = 0.0;
  auto [rest, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || rest != text.data() + text.size() || !std::isfinite(value))
    throw Error(ErrorKind::Parse, where + ": not a number: \"" + std::string(text) + "\"");
  if (value < 0.0)
    throw Error(ErrorKind::Semantic, where + ": weight must be non-negative");
  return value;
}

// ---- CSV pools --------------------------------------------------------------

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

std::optional<ReportFormat> report_format_from_string(std::string_view text) {
  if (text == "table") return ReportFormat::Table;
  if (text == "json" || text == "structured") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

OrderPool parse_pool_csv(std::string_view text, const DeckleSpec& deckle) {
  deckle.check();
  if (text.substr(0, 3) == "\xef\xbb\xbf") text.remove_prefix(3);  // UTF-8 BOM

  const std::vector<std::string_view> lines = split_lines(text);
  std::size_t row = 0;
  while (row < lines.size() && trim(lines[row]).empty()) ++row;
  if (row == lines.size())
    throw Error(ErrorKind::Parse, "line 1: missing header row `id,width,count[,weight]`");

  const std::string_view header = trim(lines[row]);
  bool with_weight = false;
  if (header == "id,width,count,weight")
    with_weight = true;
  else if (header != "id,width,count")
    throw Error(ErrorKind::Parse, "line " + std::to_string(row + 1) +
                                      ": header must be exactly `id,width,count` or "
                                      "`id,width,count,weight`, got \"" +
                                      std::string(header) + "\"");

  std::vector<Order> orders;
  std::set<std::string, std::less<>> seen;
  for (++row; row < lines.size(); ++row) {
    if (trim(lines[row]).empty()) continue;
    const std::string where = "line " + std::to_string(row + 1);
    const auto fields = split_fields(lines[row]);
    const std::size_t expected = with_weight ? 4 : 3;
    if (fields.size() != expected)
      throw Error(ErrorKind::Parse, where + ": expected " + std::to_string(expected) +
                                        " fields, got " + std::to_string(fields.size()));
    Order order;
    order.id = std::string(trim(fields[0]));
    if (order.id.empty()) throw Error(ErrorKind::Semantic, where + ": empty order id");
    if (!seen.insert(order.id).second)
      throw Error(ErrorKind::Semantic, where + ": duplicate order id " + order.id);
    order.width = check_range(parse_integer(fields[1], where + ": order " + order.id + ": width"),
                              1, kMaxLength, where + ": order " + order.id + ": width");
    order.count = check_range(parse_integer(fields[2], where + ": order " + order.id + ": count"),
                              1, kMaxCount, where + ": order " + order.id + ": count");
    if (with_weight) order.weight = parse_weight(fields[3], where + ": order " + order.id + ": weight");
    orders.push_back(std::move(order));
  }
  if (orders.empty()) throw Error(ErrorKind::Semantic, "pool must contain at least one order");
  return OrderPool(std::move(orders), deckle);
}

// ---- JSON documents ---------------------------------------------------------

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& error) {
    throw Error(ErrorKind::Parse, error.what());
  }
}

const json& require_object(const json& value, const std::string& path) {
  if (!value.is_object()) throw Error(ErrorKind::Parse, path + ": must be an object");
  return value;
}

void check_keys(const json& object, const std::vector<std::string>& required,
                const std::vector<std::string>& optional, const std::string& path) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(required.begin(), required.end(), key) == required.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end())
      throw Error(ErrorKind::Parse, path + ": unknown field \"" + key + "\"");
  }
  for (const std::string& key : required)
    if (!object.contains(key))
      throw Error(ErrorKind::Parse, path + ": missing field \"" + key + "\"");
}

std::int64_t get_integer(const json& value, const std::string& path) {
  if (value.is_number_integer() && !value.is_number_unsigned()) return value.get<std::int64_t>();
  if (value.is_number_unsigned()) {
    const std::uint64_t raw = value.get<std::uint64_t>();
    if (raw > static_cast<std::uint64_t>(INT64_MAX))
      throw Error(ErrorKind::Semantic, path + ": value out of range");
    return static_cast<std::int64_t>(raw);
  }
  if (value.is_number_float()) {
    const double raw = value.get<double>();
    if (std::floor(raw) != raw || std::abs(raw) > 9.0e18)
      throw Error(ErrorKind::Parse, path + ": must be an integer (fraction must be zero)");
    return static_cast<std::int64_t>(raw);
  }
  throw Error(ErrorKind::Parse, path + ": must be an integer");
}

std::string get_string(const json& value, const std::string& path) {
  if (!value.is_string()) throw Error(ErrorKind::Parse, path + ": must be a string");
  const std::string text = value.get<std::string>();
  if (text.empty()) throw Error(ErrorKind::Parse, path + ": must not be empty");
  return text;
}

}  // namespace

OrderPool parse_pool_json(std::string_view text) {
  const json document = parse_json(text);
  require_object(document, "document");
  check_keys(document, {"deckle", "orders"}, {}, "document");

  const json& deckle_node = require_object(document["deckle"], "deckle");
  check_keys(deckle_node, {"nominal_width", "trim_allowance", "unit"}, {}, "deckle");
  DeckleSpec deckle;
  deckle.nominal_width = get_integer(deckle_node["nominal_width"], "deckle.nominal_width");
  deckle.trim_allowance = get_integer(deckle_node["trim_allowance"], "deckle.trim_allowance");
  const std::string unit_text = get_string(deckle_node["unit"], "deckle.unit");
  const auto unit = unit_from_string(unit_text);
  if (!unit)
    throw Error(ErrorKind::Semantic, "deckle.unit: expected \"cm\" or \"mm\", got \"" + unit_text + "\"");
  deckle.unit = *unit;
  deckle.check();

  if (!document["orders"].is_array())
    throw Error(ErrorKind::Parse, "orders: must be an array");
  std::vector<Order> orders;
  std::set<std::string, std::less<>> seen;
  std::size_t position = 0;
  for (const json& node : document["orders"]) {
    const std::string path = "orders[" + std::to_string(position++) + "]";
    require_object(node, path);
    check_keys(node, {"id", "width", "count"}, {"weight"}, path);
    Order order;
    order.id = get_string(node["id"], path + ".id");
    if (!seen.insert(order.id).second)
      throw Error(ErrorKind::Semantic, path + ": duplicate order id " + order.id);
    order.width = check_range(get_integer(node["width"], path + ".width"), 1, kMaxLength,
                              path + ": order " + order.id + ": width");
    order.count = check_range(get_integer(node["count"], path + ".count"), 1, kMaxCount,
                              path + ": order " + order.id + ": count");
    if (node.contains("weight")) {
      if (!node["weight"].is_number())
        throw Error(ErrorKind::Parse, path + ".weight: must be a number");
      const double weight = node["weight"].get<double>();
      if (!std::isfinite(weight) || weight < 0.0)
        throw Error(ErrorKind::Semantic, path + ": order " + order.id +
                                             ": weight must be non-negative");
      order.weight = weight;
    }
    orders.push_back(std::move(order));
  }
  if (orders.empty()) throw Error(ErrorKind::Semantic, "pool must contain at least one order");
  return OrderPool(std::move(orders), deckle);
}

ParsedSchedule parse_schedule_json(std::string_view text) {
  const json document = parse_json(text);
  require_object(document, "document");
  check_keys(document, {"algorithm", "patterns"}, {"totals"}, "document");

  ParsedSchedule parsed;
  parsed.algorithm = get_string(document["algorithm"], "algorithm");

  if (!document["patterns"].is_array())
    throw Error(ErrorKind::Parse, "patterns: must be an array");
  std::size_t position = 0;
  for (const json& node : document["patterns"]) {
    const std::string path = "patterns[" + std::to_string(position++) + "]";
    require_object(node, path);
    check_keys(node, {"composition", "reels", "waste_per_reel"}, {}, path);
    CutPattern pattern;
    const json& composition = require_object(node["composition"], path + ".composition");
    if (composition.empty())
      throw Error(ErrorKind::Parse, path + ".composition: must not be empty");
    for (const auto& [id, mult] : composition.items()) {
      const std::int64_t value = get_integer(mult, path + ".composition." + id);
      if (value < 1)
        throw Error(ErrorKind::Parse, path + ".composition." + id + ": must be >= 1, got " +
                                          std::to_string(value));
      pattern.composition.push_back({id, value});
    }
    pattern.reels = get_integer(node["reels"], path + ".reels");
    if (pattern.reels < 1)
      throw Error(ErrorKind::Parse,
                  path + ".reels: must be >= 1, got " + std::to_string(pattern.reels));
    // present for readability; the value is recomputed, never trusted
    const std::int64_t waste = get_integer(node["waste_per_reel"], path + ".waste_per_reel");
    if (waste < 0)
      throw Error(ErrorKind::Parse, path + ".waste_per_reel: must be non-negative, got " +
                                        std::to_string(waste));
    parsed.patterns.push_back(std::move(pattern));
  }
  if (document.contains("totals")) {
    const json& totals = require_object(document["totals"], "totals");
    check_keys(totals, {}, {"used_reels", "trim_loss", "demand_width", "lower_bound_reels"},
               "totals");
    for (const auto& [key, value] : totals.items()) get_integer(value, "totals." + key);
  }
  return parsed;
}

SolveResult result_from_parsed(const ParsedSchedule& parsed, const OrderPool& pool) {
  const auto algorithm = algorithm_from_string(parsed.algorithm);
  if (!algorithm)
    throw Error(ErrorKind::BadArgument, "unknown algorithm tag \"" + parsed.algorithm + "\"");
  SolveResult result;
  result.algorithm = *algorithm;
  result.patterns = parsed.patterns;
  result.schedule = schedule_from_patterns(result.patterns, pool);
  result.metrics = compute_metrics(result.schedule, pool);
  return result;
}

// ---- rendering --------------------------------------------------------------

namespace {

// `D6 (9) + D10 (9) + D10 (9)`: one appearance per cut position on the
// reel, each carrying the number of rolls it contributes over the run.
std::string paired_orders_cell(const CutPattern& pattern) {
  std::string text;
  for (const PatternEntry& entry : pattern.composition) {
    for (Count m = 0; m < entry.multiplicity; ++m) {
      if (!text.empty()) text += " + ";
      text += entry.order_id + " (" + std::to_string(pattern.reels) + ")";
    }
  }
  return text;
}

std::string render_table(const SolveResult& result, const OrderPool& pool) {
  const std::string unit(to_string(pool.deckle().unit));
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"Paired Orders", "Rolls Required", "Waste per Roll", "Total Waste"});
  for (const CutPattern& pattern : result.patterns) {
    const Length waste = pattern_waste(pattern, pool);
    rows.push_back({paired_orders_cell(pattern), std::to_string(pattern.reels),
                    std::to_string(waste), std::to_string(waste * pattern.reels)});
  }
  std::array<std::size_t, 4> widths{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 4; ++c) widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 4; ++c) {
      out << row[c];
      if (c + 1 < 4) out << std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << "\n";
  }
  const ScheduleMetrics& m = result.metrics;
  out << "totals: " << m.used_reels << " reels, trim loss " << m.trim_loss << " " << unit
      << ", lower bound " << m.lower_bound_reels;
  if (m.reusable_hint) out << ", reusable " << *m.reusable_hint << " " << unit;
  out << "\n";
  return out.str();
}

std::string render_csv(const SolveResult& result, const OrderPool& pool) {
  std::ostringstream out;
  out << "algorithm,composition,reels,waste_per_reel\n";
  for (const CutPattern& pattern : result.patterns)
    out << to_string(result.algorithm) << "," << format_composition(pattern.composition) << ","
        << pattern.reels << "," << pattern_waste(pattern, pool) << "\n";
  const ScheduleMetrics& m = result.metrics;
  out << "# totals: used_reels=" << m.used_reels << " trim_loss=" << m.trim_loss
      << " demand_width=" << m.demand_width << " lower_bound_reels=" << m.lower_bound_reels
      << "\n";
  return out.str();
}

std::string render_json(const SolveResult& result, const OrderPool& pool) {
  json document;
  document["algorithm"] = to_string(result.algorithm);
  json patterns = json::array();
  for (const CutPattern& pattern : result.patterns) {
    json node;
    json composition;
    for (const PatternEntry& entry : pattern.composition)
      composition[entry.order_id] = entry.multiplicity;
    node["composition"] = std::move(composition);
    node["reels"] = pattern.reels;
    node["waste_per_reel"] = pattern_waste(pattern, pool);
    patterns.push_back(std::move(node));
  }
  document["patterns"] = std::move(patterns);
  document["totals"] = {{"used_reels", result.metrics.used_reels},
                        {"trim_loss", result.metrics.trim_loss},
                        {"demand_width", result.metrics.demand_width},
                        {"lower_bound_reels", result.metrics.lower_bound_reels}};
  return document.dump(2) + "\n";
}

}  // namespace

std::string render_report(const SolveResult& result, const OrderPool& pool, ReportFormat format) {
  if (result.patterns.empty())
    throw Error(ErrorKind::BadArgument, "refusing to render an empty result");
  switch (format) {
    case ReportFormat::Table: return render_table(result, pool);
    case ReportFormat::Csv: return render_csv(result, pool);
    case ReportFormat::Json: return render_json(result, pool);
  }
  throw Error(ErrorKind::BadArgument, "unknown report format");
}

}  // namespace papercut
