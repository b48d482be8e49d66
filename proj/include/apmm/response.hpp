// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "apmm/rating.hpp"

namespace apmm {

/// One rater's questionnaire answers. A key mapped to an empty Cell is an
/// explicit blank; a missing key is an implicit blank. Both score the same.
struct ResponseSet {
  std::string model_id;
  std::string organization;
  std::string rater;
  std::map<std::string, Cell> ratings;

  friend bool operator==(const ResponseSet&, const ResponseSet&) = default;
};

/// How a consolidated rating was obtained.
enum class Provenance {
  Unanimous,       // every non-blank rating was identical
  Median,          // lower median of differing nonzero ratings
  ZeroSuppressed,  // "Doesn't Apply" overridden by concrete ratings
  AllBlank,        // nobody answered
  FirstRater,      // copied from the first response verbatim
};

inline std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Unanimous: return "unanimous";
    case Provenance::Median: return "median";
    case Provenance::ZeroSuppressed: return "zero-suppressed";
    case Provenance::AllBlank: return "all-blank";
    case Provenance::FirstRater: return "first-rater";
  }
  return "unanimous";
}

/// A single rating per statement, ready for scoring. Holds every statement
/// id of the model it was built against.
struct ConsolidatedResponse {
  std::string model_id;
  std::string organization;
  int rater_count = 1;
  std::map<std::string, Cell> ratings;
  std::map<std::string, Provenance> provenance;

  friend bool operator==(const ConsolidatedResponse&, const ConsolidatedResponse&) = default;

  Cell at(std::string_view statement_id) const {
    auto it = ratings.find(std::string(statement_id));
    return it == ratings.end() ? Cell{} : it->second;
  }
};

}  // namespace apmm
