#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "symsums/generator.hpp"
#include "symsums/magic.hpp"
#include "symsums/prouhet.hpp"
#include "symsums/reducer.hpp"
#include "symsums/report.hpp"
#include "symsums/scalar.hpp"

namespace symsums {

using Json = nlohmann::ordered_json;

template <ScalarDomain S>
Json scalars_to_json(const std::vector<S>& values) {
  Json arr = Json::array();
  for (const S& v : values) arr.push_back(render(v));
  return arr;
}

template <ScalarDomain S>
std::vector<S> scalars_from_json(const Json& arr, const ParseOptions& options = {}) {
  if (!arr.is_array()) throw Error("expected a JSON array of scalars");
  std::vector<S> out;
  for (const auto& item : arr) {
    // bare JSON numbers are accepted via their shortest decimal text, which
    // keeps short literals like 2.1 exact
    const std::string text = item.is_string() ? item.get<std::string>() : item.dump();
    out.push_back(ScalarTraits<S>::parse(text, options));
  }
  return out;
}

template <ScalarDomain S>
Json to_json(const SolutionPair<S>& pair) {
  Json j;
  j["domain"] = ScalarTraits<S>::name;
  j["level"] = pair.level;
  j["base"]["left"] = scalars_to_json(pair.base.left);
  j["base"]["right"] = scalars_to_json(pair.base.right);
  j["shifts"] = scalars_to_json(pair.shifts);
  j["xs"] = scalars_to_json(pair.xs);
  j["ys"] = scalars_to_json(pair.ys);
  return j;
}

template <ScalarDomain S>
SolutionPair<S> pair_from_json(const Json& j, const ParseOptions& options = {}) {
  SolutionPair<S> pair;
  try {
    pair.level = j.at("level").get<int>();
    pair.base.left = scalars_from_json<S>(j.at("base").at("left"), options);
    pair.base.right = scalars_from_json<S>(j.at("base").at("right"), options);
    pair.shifts = scalars_from_json<S>(j.at("shifts"), options);
    pair.xs = scalars_from_json<S>(j.at("xs"), options);
    pair.ys = scalars_from_json<S>(j.at("ys"), options);
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed solution-pair JSON: ") + e.what());
  }
  const std::size_t n = pair.base.left.size();
  if (pair.level < 1 || static_cast<std::size_t>(pair.level) != pair.shifts.size())
    throw Error("solution-pair JSON: level must equal the number of shifts");
  if (n < 2 || pair.base.right.size() != n)
    throw Error("solution-pair JSON: base sides must have equal length N >= 2");
  const std::size_t expected = (std::size_t{1} << (pair.level - 1)) * n;
  if (pair.xs.size() != expected || pair.ys.size() != expected)
    throw Error("solution-pair JSON: expected " + std::to_string(expected) +
                " values per side");
  return pair;
}

/// Two bare value lists plus a maximum power: the generic verification input.
/// Accepts either a full solution-pair document or {"xs", "ys", "max_power"}.
template <ScalarDomain S>
struct GenericSystem {
  std::vector<S> xs, ys;
  int max_power = 0;
};

template <ScalarDomain S>
GenericSystem<S> system_from_json(const Json& j, const ParseOptions& options = {}) {
  GenericSystem<S> sys;
  try {
    // solution pairs carry xs/ys, reduced identities left/right
    const bool reduced = !j.contains("xs") && j.contains("left");
    sys.xs = scalars_from_json<S>(j.at(reduced ? "left" : "xs"), options);
    sys.ys = scalars_from_json<S>(j.at(reduced ? "right" : "ys"), options);
    if (j.contains("max_power"))
      sys.max_power = j.at("max_power").get<int>();
    else
      sys.max_power = j.at("level").get<int>();
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed system JSON: ") + e.what());
  }
  if (sys.max_power < 1) throw Error("system JSON: max power must be >= 1");
  return sys;
}

template <ScalarDomain S>
Json to_json(const ReducedIdentity<S>& reduced) {
  Json j;
  j["domain"] = ScalarTraits<S>::name;
  j["max_power"] = reduced.max_power;
  j["left"] = scalars_to_json(reduced.left);
  j["right"] = scalars_to_json(reduced.right);
  j["left_size"] = reduced.left.size();
  j["right_size"] = reduced.right.size();
  Json sums;
  sums["left"] = Json::array();
  sums["right"] = Json::array();
  for (int m = 1; m <= reduced.max_power; ++m) {
    sums["left"].push_back(render(power_sum(reduced.left, static_cast<unsigned>(m))));
    sums["right"].push_back(render(power_sum(reduced.right, static_cast<unsigned>(m))));
  }
  j["sums"] = std::move(sums);
  Json removed = Json::array();
  for (const auto& entry : reduced.removed) {
    Json e;
    e["value"] = render(entry.value);
    e["count"] = entry.count;
    e["reason"] = to_string(entry.reason);
    removed.push_back(std::move(e));
  }
  j["removed"] = std::move(removed);
  j["source"] = to_json(reduced.source);
  return j;
}

template <ScalarDomain S>
Json to_json(const MagicSquare<S>& square) {
  Json j;
  j["domain"] = ScalarTraits<S>::name;
  Json entries = Json::array();
  for (const auto& row : square.entries)
    for (const S& v : row) entries.push_back(render(v));
  j["entries"] = std::move(entries); // row-major
  j["magic_sum"] = render(square.magic_sum);
  return j;
}

Json to_json(const ProuhetSplit& split);
Json to_json(const VerificationReport& report);

// CSV renderings; cells always use the scalar text grammar.
template <ScalarDomain S>
std::string pair_to_csv(const SolutionPair<S>& pair) {
  std::string out = "i,x,y\n";
  for (std::size_t i = 0; i < pair.xs.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += render(pair.xs[i]);
    out += ',';
    out += render(pair.ys[i]);
    out += '\n';
  }
  return out;
}

template <ScalarDomain S>
std::string reduced_to_csv(const ReducedIdentity<S>& reduced) {
  std::string out = "i,left,right\n";
  const std::size_t rows = std::max(reduced.left.size(), reduced.right.size());
  for (std::size_t i = 0; i < rows; ++i) {
    out += std::to_string(i + 1);
    out += ',';
    if (i < reduced.left.size()) out += render(reduced.left[i]);
    out += ',';
    if (i < reduced.right.size()) out += render(reduced.right[i]);
    out += '\n';
  }
  return out;
}

template <ScalarDomain S>
std::string square_to_csv(const MagicSquare<S>& square) {
  std::string out;
  for (const auto& row : square.entries) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (c > 0) out += ',';
      out += render(row[c]);
    }
    out += '\n';
  }
  out += "magic_sum," + render(square.magic_sum) + '\n';
  return out;
}

/// Aligned text grid for terminal output.
template <ScalarDomain S>
std::string square_to_text(const MagicSquare<S>& square) {
  std::array<std::size_t, 4> widths{};
  std::array<std::array<std::string, 4>, 4> cells;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      cells[r][c] = render(square.entries[r][c]);
      widths[c] = std::max(widths[c], cells[r][c].size());
    }
  std::string out;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (c > 0) out += "  ";
      out += std::string(widths[c] - cells[r][c].size(), ' ') + cells[r][c];
    }
    out += '\n';
  }
  out += "magic sum: " + render(square.magic_sum) + '\n';
  return out;
}

} // namespace symsums
