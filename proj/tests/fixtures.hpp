// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string_view>

#include "apmm/builtin_model.hpp"
#include "apmm/case_studies.hpp"
#include "apmm/consolidation.hpp"
#include "apmm/response_file.hpp"

namespace apmm::testing {

inline ResponseSet parse_or_throw(std::string_view text, const MaturityModel& model = builtin_model()) {
  auto parsed = parse_response_file(text, model);
  if (!parsed.ok()) throw std::runtime_error("fixture does not parse: " + parsed.diagnostics.front().message);
  return parsed.response;
}

inline ConsolidatedResponse org_a() { return consolidate(parse_or_throw(case_studies::kOrgA), builtin_model()); }
inline ConsolidatedResponse org_b() { return consolidate(parse_or_throw(case_studies::kOrgB), builtin_model()); }

inline ConsolidatedResponse uniform(const MaturityModel& model, Cell value) {
  ConsolidatedResponse r;
  r.model_id = model.id;
  for (const auto& s : model.statements) r.ratings[s.id] = value;
  return r;
}

}  // namespace apmm::testing
