// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "apmm/error.hpp"

namespace apmm {

/// Grouping of process activities. Display only; never affects scoring.
enum class Dimension { ArchitectureDesign, ProductLineManagement, Documentation };

inline std::string_view dimension_keyword(Dimension d) {
  switch (d) {
    case Dimension::ArchitectureDesign: return "design";
    case Dimension::ProductLineManagement: return "management";
    case Dimension::Documentation: return "documentation";
  }
  return "design";
}

inline std::optional<Dimension> dimension_from_keyword(std::string_view s) {
  if (s == "design") return Dimension::ArchitectureDesign;
  if (s == "management") return Dimension::ProductLineManagement;
  if (s == "documentation") return Dimension::Documentation;
  return std::nullopt;
}

/// Exact decimal fraction, e.g. 0.8 is {8, 10}. Kept exact so that
/// threshold rounding never depends on binary floating point.
struct PassRatio {
  std::int64_t numerator = 8;
  std::int64_t scale = 10;  // always a power of ten

  /// Parses a plain decimal such as "0.8", "1", "0.75". Returns nullopt on
  /// anything else (signs, exponents, more than 9 fractional digits).
  static std::optional<PassRatio> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    const auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (frac.size() > 9 || whole.size() > 9) return std::nullopt;
    auto all_digits = [](std::string_view s) {
      return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
    PassRatio r{0, 1};
    for (char c : whole) r.numerator = r.numerator * 10 + (c - '0');
    for (char c : frac) {
      r.numerator = r.numerator * 10 + (c - '0');
      r.scale *= 10;
    }
    while (r.scale > 1 && r.numerator % 10 == 0) {
      r.numerator /= 10;
      r.scale /= 10;
    }
    return r;
  }

  std::string to_string() const {
    std::string digits = std::to_string(numerator);
    std::size_t places = 0;
    for (std::int64_t s = scale; s > 1; s /= 10) ++places;
    if (places == 0) return digits;
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    return digits;
  }

  double value() const { return static_cast<double>(numerator) / static_cast<double>(scale); }

  bool in_unit_interval() const { return numerator > 0 && numerator <= scale; }

  friend bool operator==(const PassRatio& a, const PassRatio& b) {
    return a.numerator * b.scale == b.numerator * a.scale;
  }
};

struct Level {
  int index = 0;
  std::string name;

  friend bool operator==(const Level&, const Level&) = default;
};

struct Activity {
  std::string id;
  std::string name;
  Dimension dimension = Dimension::ArchitectureDesign;
  bool gating = false;

  friend bool operator==(const Activity&, const Activity&) = default;
};

struct Statement {
  std::string id;
  int level_index = 0;
  std::string activity_id;
  std::string text;

  friend bool operator==(const Statement&, const Statement&) = default;
};

/// A questionnaire-based maturity model: ordered levels, the activities
/// statements are grouped under, and the pass rule parameters.
///
/// Statements are kept in declaration order, which is also the order in
/// which reports and serialized documents list them.
struct MaturityModel {
  std::string id;
  std::string name;
  std::vector<Level> levels;
  std::vector<Activity> activities;
  std::vector<Statement> statements;
  PassRatio pass_ratio{};

  friend bool operator==(const MaturityModel&, const MaturityModel&) = default;

  const Level* find_level(int index) const {
    for (const auto& l : levels)
      if (l.index == index) return &l;
    return nullptr;
  }

  const Activity* find_activity(std::string_view activity_id) const {
    for (const auto& a : activities)
      if (a.id == activity_id) return &a;
    return nullptr;
  }

  const Statement* find_statement(std::string_view statement_id) const {
    for (const auto& s : statements)
      if (s.id == statement_id) return &s;
    return nullptr;
  }

  /// 1-based position of an activity in declaration order, 0 when unknown.
  int activity_number(std::string_view activity_id) const {
    for (std::size_t i = 0; i < activities.size(); ++i)
      if (activities[i].id == activity_id) return static_cast<int>(i) + 1;
    return 0;
  }

  std::vector<std::string> gating_activity_ids() const {
    std::vector<std::string> out;
    for (const auto& a : activities)
      if (a.gating) out.push_back(a.id);
    return out;
  }

  /// Statements at `level_index`, optionally restricted to one activity.
  std::vector<const Statement*> statements_at(int level_index,
                                              std::optional<std::string_view> activity_id = {}) const {
    std::vector<const Statement*> out;
    for (const auto& s : statements)
      if (s.level_index == level_index && (!activity_id || s.activity_id == *activity_id))
        out.push_back(&s);
    return out;
  }

  int statement_count(int level_index, std::optional<std::string_view> activity_id = {}) const {
    return static_cast<int>(statements_at(level_index, activity_id).size());
  }
};

namespace detail {

// Splits "S.1.2.3" into {1, 2, 3}; nullopt unless the id has that exact shape.
inline std::optional<std::vector<int>> split_sijk(std::string_view id) {
  if (id.size() < 2 || id[0] != 'S' || id[1] != '.') return std::nullopt;
  std::vector<int> parts;
  std::string_view rest = id.substr(2);
  while (true) {
    const auto dot = rest.find('.');
    std::string_view piece = rest.substr(0, dot);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) return std::nullopt;
    parts.push_back(v);
    if (dot == std::string_view::npos) break;
    rest = rest.substr(dot + 1);
  }
  if (parts.size() != 3) return std::nullopt;
  return parts;
}

}  // namespace detail

/// Checks every structural invariant of `model`. Returns one description per
/// violation, in a deterministic order; empty means the model is usable.
inline std::vector<std::string> validate_model(const MaturityModel& model) {
  std::vector<std::string> out;

  if (model.id.empty()) out.push_back("model id is empty");
  if (!model.pass_ratio.in_unit_interval())
    out.push_back("pass ratio " + model.pass_ratio.to_string() + " is outside (0, 1]");

  if (model.levels.empty()) {
    out.push_back("model has no levels");
  } else {
    std::vector<int> indices;
    for (const auto& l : model.levels) indices.push_back(l.index);
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    bool contiguous = true;
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i) + 1) contiguous = false;
    if (!contiguous) {
      std::string list;
      for (int i : indices) list += (list.empty() ? "" : ",") + std::to_string(i);
      out.push_back("non-contiguous level indices {" + list + "}; levels must be numbered 1..L");
    }
  }

  std::set<std::string> activity_ids;
  for (const auto& a : model.activities) {
    if (a.id.empty()) out.push_back("activity with empty id");
    else if (!activity_ids.insert(a.id).second) out.push_back("duplicate activity id " + a.id);
  }
  std::set<std::string> statement_ids;
  for (const auto& s : model.statements) {
    if (s.id.empty()) {
      out.push_back("statement with empty id");
      continue;
    }
    if (!statement_ids.insert(s.id).second) out.push_back("duplicate statement id " + s.id);
    if (!model.find_level(s.level_index))
      out.push_back("statement " + s.id + " references unknown level " + std::to_string(s.level_index));
    if (!model.find_activity(s.activity_id))
      out.push_back("statement " + s.id + " references unknown activity \"" + s.activity_id + "\"");
    if (auto parts = detail::split_sijk(s.id)) {
      const auto& p = *parts;
      if (p[0] <= 0 || p[1] <= 0 || p[2] <= 0)
        out.push_back("statement " + s.id + " has a non-positive id component");
      if (p[0] != s.level_index)
        out.push_back("statement " + s.id + " id names level " + std::to_string(p[0]) + " but is declared at level " +
                      std::to_string(s.level_index));
      const int number = model.activity_number(s.activity_id);
      if (number != 0 && p[1] != number)
        out.push_back("statement " + s.id + " id names activity number " + std::to_string(p[1]) + " but " +
                      s.activity_id + " is activity number " + std::to_string(number));
    }
  }

  for (const auto& l : model.levels) {
    for (const auto& g : model.gating_activity_ids()) {
      if (model.statement_count(l.index, g) == 0)
        out.push_back("level " + std::to_string(l.index) + " has no statements for gating activity " + g);
    }
  }
  return out;
}

}  // namespace apmm
