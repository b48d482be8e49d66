// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

// Line-oriented model-definition documents.
//
//   # comment
//   model <id>
//   name <display name>
//   pass-ratio <decimal>                      (optional, default 0.8)
//   activity <id> <design|management|documentation> <gating|non-gating> <display name>
//   level <index> <display name>
//   statement <id> <level-index> <activity-id> <text to end of line>
//
// Activities and levels must be declared before a statement references them.

#pragma once

#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "apmm/error.hpp"
#include "apmm/model.hpp"
#include "apmm/text.hpp"

namespace apmm {

/// Parses and validates a model-definition document. Throws ParseError for
/// syntax problems and ValidationError when the parsed model breaks an
/// invariant.
inline MaturityModel load_model(std::string_view document) {
  MaturityModel model;
  bool seen_model = false, seen_name = false, seen_ratio = false;
  std::set<int> declared_levels;
  std::set<std::string, std::less<>> declared_activities;

  std::size_t line_no = 0;
  for (std::string_view raw : text::split_lines(document)) {
    ++line_no;
    std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;

    text::Cursor cur(line);
    const std::string_view keyword = cur.word();

    auto require_word = [&](std::string_view what) {
      std::string_view w = cur.word();
      if (w.empty()) throw ParseError(line_no, "missing " + std::string(what) + " after '" + std::string(keyword) + "'");
      return w;
    };
    auto require_rest = [&](std::string_view what) {
      std::string_view r = cur.rest();
      if (r.empty()) throw ParseError(line_no, "missing " + std::string(what) + " after '" + std::string(keyword) + "'");
      return std::string(r);
    };
    auto require_int = [&](std::string_view what) {
      std::string_view w = require_word(what);
      auto v = text::parse_int(w);
      if (!v) throw ParseError(line_no, std::string(what) + " '" + std::string(w) + "' is not an integer");
      return *v;
    };
    auto no_trailing = [&] {
      if (!cur.rest().empty()) throw ParseError(line_no, "unexpected trailing text after '" + std::string(keyword) + "'");
    };

    if (keyword == "model") {
      if (seen_model) throw ParseError(line_no, "duplicate 'model' header");
      seen_model = true;
      model.id = std::string(require_word("model id"));
      no_trailing();
    } else if (keyword == "name") {
      if (seen_name) throw ParseError(line_no, "duplicate 'name' header");
      seen_name = true;
      model.name = require_rest("display name");
    } else if (keyword == "pass-ratio") {
      if (seen_ratio) throw ParseError(line_no, "duplicate 'pass-ratio' header");
      seen_ratio = true;
      std::string_view w = require_word("decimal");
      auto ratio = PassRatio::parse(w);
      if (!ratio) throw ParseError(line_no, "pass-ratio '" + std::string(w) + "' is not a plain decimal");
      model.pass_ratio = *ratio;
      no_trailing();
    } else if (keyword == "activity") {
      Activity a;
      a.id = std::string(require_word("activity id"));
      std::string_view dim = require_word("dimension");
      auto d = dimension_from_keyword(dim);
      if (!d)
        throw ParseError(line_no, "unknown dimension '" + std::string(dim) + "' (expected design, management or documentation)");
      a.dimension = *d;
      std::string_view gate = require_word("gating flag");
      if (gate == "gating") a.gating = true;
      else if (gate == "non-gating") a.gating = false;
      else throw ParseError(line_no, "expected 'gating' or 'non-gating', got '" + std::string(gate) + "'");
      a.name = require_rest("display name");
      declared_activities.insert(a.id);
      model.activities.push_back(std::move(a));
    } else if (keyword == "level") {
      Level l;
      l.index = require_int("level index");
      l.name = require_rest("display name");
      declared_levels.insert(l.index);
      model.levels.push_back(std::move(l));
    } else if (keyword == "statement") {
      Statement s;
      s.id = std::string(require_word("statement id"));
      s.level_index = require_int("level index");
      s.activity_id = std::string(require_word("activity id"));
      s.text = require_rest("statement text");
      if (!declared_levels.count(s.level_index))
        throw ParseError(line_no, "statement " + s.id + " references level " + std::to_string(s.level_index) +
                                      " before it is declared");
      if (!declared_activities.count(s.activity_id))
        throw ParseError(line_no, "statement " + s.id + " references activity \"" + s.activity_id +
                                      "\" before it is declared");
      model.statements.push_back(std::move(s));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(keyword) + "'");
    }
  }

  const std::size_t end_line = line_no == 0 ? 1 : line_no;
  if (!seen_model) throw ParseError(end_line, "missing 'model' header");
  if (!seen_name) throw ParseError(end_line, "missing 'name' header");

  if (auto violations = validate_model(model); !violations.empty()) throw ValidationError(std::move(violations));
  return model;
}

/// Writes `model` in the document format accepted by load_model.
inline std::string serialize_model(const MaturityModel& model) {
  std::ostringstream os;
  os << "model " << model.id << '\n';
  os << "name " << model.name << '\n';
  os << "pass-ratio " << model.pass_ratio.to_string() << '\n';
  os << '\n';
  for (const auto& a : model.activities)
    os << "activity " << a.id << ' ' << dimension_keyword(a.dimension) << ' ' << (a.gating ? "gating" : "non-gating")
       << ' ' << a.name << '\n';
  os << '\n';
  for (const auto& l : model.levels) os << "level " << l.index << ' ' << l.name << '\n';
  int current_level = -1;
  for (const auto& s : model.statements) {
    if (s.level_index != current_level) {
      os << '\n';
      current_level = s.level_index;
    }
    os << "statement " << s.id << ' ' << s.level_index << ' ' << s.activity_id << ' ' << s.text << '\n';
  }
  return os.str();
}

}  // namespace apmm
