// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apmm/error.hpp"
#include "apmm/model.hpp"
#include "apmm/rating.hpp"
#include "apmm/response.hpp"

namespace apmm {

/// Pass/fail evaluation of one maturity level.
struct LevelVerdict {
  int level_index = 0;
  int total_statements = 0;
  int agreed = 0;
  int pass_threshold = 0;
  std::map<std::string, int> gating_agreed;
  std::map<std::string, int> gating_threshold;
  int blanks = 0;
  bool passed = false;

  friend bool operator==(const LevelVerdict&, const LevelVerdict&) = default;
};

/// Every level's verdict plus the resulting maturity level (0 = none passed).
struct AssessmentOutcome {
  std::vector<LevelVerdict> verdicts;
  int aml = 0;
  std::string aml_name = "Not Rated";

  friend bool operator==(const AssessmentOutcome&, const AssessmentOutcome&) = default;
};

inline constexpr std::string_view kNotRated = "Not Rated";

/// Number of agreed statements at `level`, optionally restricted to one
/// activity. Blanks never count.
inline int count_agreed(const ConsolidatedResponse& resp, int level_index, const MaturityModel& model,
                        std::optional<std::string_view> activity_filter = {}) {
  if (!model.find_level(level_index)) throw InputError("unknown level " + std::to_string(level_index));
  if (activity_filter && !model.find_activity(*activity_filter))
    throw InputError("unknown activity \"" + std::string(*activity_filter) + "\"");
  int n = 0;
  for (const Statement* s : model.statements_at(level_index, activity_filter))
    if (is_agreed(resp.at(s->id))) ++n;
  return n;
}

inline LevelVerdict evaluate_level(const ConsolidatedResponse& resp, int level_index, const MaturityModel& model) {
  LevelVerdict v;
  v.level_index = level_index;
  v.agreed = count_agreed(resp, level_index, model);
  v.total_statements = model.statement_count(level_index);
  v.pass_threshold = pass_threshold(v.total_statements, model.pass_ratio);
  for (const Statement* s : model.statements_at(level_index))
    if (!resp.at(s->id)) ++v.blanks;

  v.passed = v.agreed >= v.pass_threshold;
  for (const auto& gate : model.gating_activity_ids()) {
    const int agreed = count_agreed(resp, level_index, model, gate);
    const int threshold = pass_threshold(model.statement_count(level_index, gate), model.pass_ratio);
    v.gating_agreed[gate] = agreed;
    v.gating_threshold[gate] = threshold;
    if (agreed < threshold) v.passed = false;
  }
  return v;
}

/// Scores every level. The maturity level is the highest passing level;
/// lower levels are not required to pass.
inline AssessmentOutcome maturity_level(const ConsolidatedResponse& resp, const MaturityModel& model) {
  AssessmentOutcome out;
  std::vector<int> indices;
  for (const auto& l : model.levels) indices.push_back(l.index);
  std::sort(indices.begin(), indices.end());
  for (int j : indices) {
    out.verdicts.push_back(evaluate_level(resp, j, model));
    if (out.verdicts.back().passed) {
      out.aml = j;
      out.aml_name = model.find_level(j)->name;
    }
  }
  return out;
}

}  // namespace apmm
