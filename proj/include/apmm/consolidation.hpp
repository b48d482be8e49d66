// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apmm/error.hpp"
#include "apmm/model.hpp"
#include "apmm/response.hpp"

namespace apmm {

enum class ConsolidationRule {
  Median,  // lower median of nonzero ratings; zeros only when nothing else
  First,   // first response verbatim
};

inline std::string_view consolidation_name(ConsolidationRule r) {
  return r == ConsolidationRule::Median ? "median" : "first";
}

inline std::optional<ConsolidationRule> consolidation_from_name(std::string_view s) {
  if (s == "median") return ConsolidationRule::Median;
  if (s == "first") return ConsolidationRule::First;
  return std::nullopt;
}

namespace detail {

inline void check_responses(std::span<const ResponseSet> responses, const MaturityModel& model) {
  if (responses.empty()) throw InputError("no responses to consolidate");
  const auto& first = responses.front();
  for (const auto& r : responses) {
    if (r.model_id != first.model_id)
      throw InputError("responses reference different models: \"" + first.model_id + "\" and \"" + r.model_id + "\"");
    if (r.organization != first.organization)
      throw InputError("responses come from different organizations: \"" + first.organization + "\" and \"" +
                       r.organization + "\"");
    for (const auto& [id, cell] : r.ratings)
      if (!model.find_statement(id))
        throw InputError("rater \"" + r.rater + "\" rated unknown statement id " + id);
  }
  if (!first.model_id.empty() && first.model_id != model.id)
    throw InputError("responses reference model \"" + first.model_id + "\" but the model in use is \"" + model.id +
                     "\"");
}

inline Cell lookup(const ResponseSet& r, const std::string& id) {
  auto it = r.ratings.find(id);
  return it == r.ratings.end() ? Cell{} : it->second;
}

}  // namespace detail

/// Merges one value per statement from several raters of the same
/// organization.
///
/// Median rule, per statement: blanks are ignored; if any nonzero rating is
/// present, zeros are dropped and the lower median of the nonzero ratings is
/// taken; otherwise the result is 0 if anyone answered, blank if nobody did.
inline ConsolidatedResponse consolidate(std::span<const ResponseSet> responses, const MaturityModel& model,
                                        ConsolidationRule rule = ConsolidationRule::Median) {
  detail::check_responses(responses, model);

  ConsolidatedResponse out;
  out.model_id = responses.front().model_id.empty() ? model.id : responses.front().model_id;
  out.organization = responses.front().organization;
  out.rater_count = static_cast<int>(responses.size());

  for (const auto& s : model.statements) {
    if (rule == ConsolidationRule::First) {
      const Cell c = detail::lookup(responses.front(), s.id);
      out.ratings[s.id] = c;
      out.provenance[s.id] = c ? Provenance::FirstRater : Provenance::AllBlank;
      continue;
    }

    std::vector<int> given;
    for (const auto& r : responses)
      if (const Cell c = detail::lookup(r, s.id)) given.push_back(c->value());

    if (given.empty()) {
      out.ratings[s.id] = Cell{};
      out.provenance[s.id] = Provenance::AllBlank;
      continue;
    }
    std::sort(given.begin(), given.end());
    if (given.front() == given.back()) {
      out.ratings[s.id] = Rating(given.front());
      out.provenance[s.id] = Provenance::Unanimous;
      continue;
    }
    const auto first_nonzero = std::upper_bound(given.begin(), given.end(), 0);
    const bool had_zero = first_nonzero != given.begin();
    std::vector<int> nonzero(first_nonzero, given.end());
    // given is not constant, so at least one nonzero rating exists here.
    out.ratings[s.id] = Rating(nonzero[(nonzero.size() - 1) / 2]);
    out.provenance[s.id] = had_zero ? Provenance::ZeroSuppressed : Provenance::Median;
  }
  return out;
}

inline ConsolidatedResponse consolidate(const ResponseSet& single, const MaturityModel& model) {
  return consolidate(std::span<const ResponseSet>(&single, 1), model);
}

struct CoverageCounts {
  int answered = 0;       // includes "Doesn't Apply"
  int blank = 0;          // explicit or missing
  int not_applicable = 0; // rated 0

  friend bool operator==(const CoverageCounts&, const CoverageCounts&) = default;
};

struct RaterCoverage {
  std::string rater;
  std::map<int, CoverageCounts> per_level;
  CoverageCounts total;

  friend bool operator==(const RaterCoverage&, const RaterCoverage&) = default;
};

/// Per-rater answered/blank/"Doesn't Apply" counts, one row per response in
/// input order.
inline std::vector<RaterCoverage> coverage_report(std::span<const ResponseSet> responses, const MaturityModel& model) {
  detail::check_responses(responses, model);
  std::vector<RaterCoverage> rows;
  for (const auto& r : responses) {
    RaterCoverage row;
    row.rater = r.rater;
    for (const auto& l : model.levels) row.per_level[l.index];
    for (const auto& s : model.statements) {
      auto& lvl = row.per_level[s.level_index];
      const Cell c = detail::lookup(r, s.id);
      if (!c) {
        ++lvl.blank;
        ++row.total.blank;
        continue;
      }
      ++lvl.answered;
      ++row.total.answered;
      if (c->value() == 0) {
        ++lvl.not_applicable;
        ++row.total.not_applicable;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace apmm
