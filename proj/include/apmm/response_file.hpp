// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

// Rater response files.
//
//   # comment (anywhere; runs to end of line)
//   @model <id>
//   @org <name>
//   @rater <name>
//   S.1.1.1 3
//   S.1.1.2 -        <- explicit blank
//
// Metadata lines precede data lines. Ratings are 0..4 or '-'.

#pragma once

#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "apmm/model.hpp"
#include "apmm/response.hpp"
#include "apmm/text.hpp"

namespace apmm {

enum class Severity { Error, Warning };

struct ParseDiagnostic {
  std::size_t line = 1;
  Severity severity = Severity::Error;
  std::string message;

  friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

inline std::string format_diagnostic(const ParseDiagnostic& d, std::string_view source = {}) {
  std::string out;
  if (!source.empty()) out += std::string(source) + ":";
  out += std::to_string(d.line) + ": ";
  out += d.severity == Severity::Error ? "error: " : "warning: ";
  out += d.message;
  return out;
}

struct ParsedResponse {
  ResponseSet response;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const {
    for (const auto& d : diagnostics)
      if (d.severity == Severity::Error) return false;
    return true;
  }
};

/// Parses a response file against `model`. Content problems never throw;
/// they are returned as diagnostics. An absent @model defaults to the model's
/// id; absent @org / @rater are left empty with a warning.
inline ParsedResponse parse_response_file(std::string_view document, const MaturityModel& model) {
  ParsedResponse out;
  auto& rs = out.response;
  auto diag = [&](std::size_t line, Severity sev, std::string msg) {
    out.diagnostics.push_back({line, sev, std::move(msg)});
  };

  bool seen_model = false, seen_org = false, seen_rater = false, seen_data = false;
  std::set<std::string, std::less<>> seen_ids;

  std::size_t line_no = 0;
  for (std::string_view raw : text::split_lines(document)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = text::trim(line);
    if (line.empty()) continue;

    text::Cursor cur(line);
    const std::string_view head = cur.word();

    if (head.front() == '@') {
      if (seen_data) {
        diag(line_no, Severity::Error, "metadata line '" + std::string(head) + "' after data lines");
        continue;
      }
      const std::string value(cur.rest());
      if (value.empty()) {
        diag(line_no, Severity::Error, "missing value for '" + std::string(head) + "'");
        continue;
      }
      bool* seen = nullptr;
      std::string* field = nullptr;
      if (head == "@model") seen = &seen_model, field = &rs.model_id;
      else if (head == "@org") seen = &seen_org, field = &rs.organization;
      else if (head == "@rater") seen = &seen_rater, field = &rs.rater;
      else {
        diag(line_no, Severity::Error, "unknown metadata key '" + std::string(head) + "'");
        continue;
      }
      if (*seen) {
        diag(line_no, Severity::Error, "duplicate '" + std::string(head) + "' line");
        continue;
      }
      *seen = true;
      *field = value;
      if (head == "@model" && value != model.id)
        diag(line_no, Severity::Error, "response is for model \"" + value + "\" but the model in use is \"" + model.id + "\"");
      continue;
    }

    seen_data = true;
    const std::string id(head);
    const std::string_view token = cur.word();
    if (token.empty()) {
      diag(line_no, Severity::Error, "missing rating for " + id);
      continue;
    }
    if (!cur.rest().empty()) {
      diag(line_no, Severity::Error, "unexpected text after rating for " + id);
      continue;
    }
    Cell cell;
    if (token != "-") {
      const auto v = text::parse_int(token);
      const auto r = v ? Rating::from_int(*v) : std::nullopt;
      if (!r || token.size() != 1) {
        diag(line_no, Severity::Error, "invalid rating '" + std::string(token) + "' for " + id + " (expected 0-4 or -)");
        continue;
      }
      cell = *r;
    }
    if (!model.find_statement(id)) {
      diag(line_no, Severity::Error, "unknown statement id " + id);
      continue;
    }
    if (!seen_ids.insert(id).second) {
      diag(line_no, Severity::Error, "duplicate rating for " + id);
      continue;
    }
    rs.ratings[id] = cell;
  }

  const std::size_t last = line_no == 0 ? 1 : line_no;
  if (!seen_model) {
    rs.model_id = model.id;
    diag(last, Severity::Warning, "no @model line; assuming \"" + model.id + "\"");
  }
  if (!seen_org) diag(last, Severity::Warning, "no @org line");
  if (!seen_rater) diag(last, Severity::Warning, "no @rater line");
  return out;
}

/// Writes a response file. Statements are listed in model order; only keys
/// present in `rs.ratings` are written, explicit blanks as '-'.
inline std::string emit_response_file(const ResponseSet& rs, const MaturityModel& model) {
  std::ostringstream os;
  if (!rs.model_id.empty()) os << "@model " << rs.model_id << '\n';
  if (!rs.organization.empty()) os << "@org " << rs.organization << '\n';
  if (!rs.rater.empty()) os << "@rater " << rs.rater << '\n';
  int level = -1;
  for (const auto& s : model.statements) {
    auto it = rs.ratings.find(s.id);
    if (it == rs.ratings.end()) continue;
    if (s.level_index != level) {
      level = s.level_index;
      if (const Level* l = model.find_level(level)) os << "\n# Level " << level << ": " << l->name << '\n';
    }
    os << s.id << ' ';
    if (it->second) os << it->second->value();
    else os << '-';
    os << '\n';
  }
  return os.str();
}

}  // namespace apmm
