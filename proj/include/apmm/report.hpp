// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "apmm/agreement.hpp"
#include "apmm/consolidation.hpp"
#include "apmm/error.hpp"
#include "apmm/model.hpp"
#include "apmm/rating_engine.hpp"

namespace apmm {

struct GateRow {
  std::string activity;
  int agreed = 0;
  int threshold = 0;

  friend bool operator==(const GateRow&, const GateRow&) = default;
};

struct LevelRow {
  int index = 0;
  std::string name;
  int total = 0;
  int agreed = 0;
  int threshold = 0;
  std::vector<GateRow> gates;
  int blanks = 0;
  bool passed = false;

  friend bool operator==(const LevelRow&, const LevelRow&) = default;
};

/// Everything printed for one organization's assessment.
struct AssessmentReport {
  std::string model_id;
  std::string model_name;
  std::string organization;
  std::vector<std::string> raters;
  std::string consolidation;
  std::vector<LevelRow> levels;
  int aml = 0;
  std::string aml_name{kNotRated};
  std::vector<std::string> notes;

  friend bool operator==(const AssessmentReport&, const AssessmentReport&) = default;
};

inline AssessmentReport make_report(const AssessmentOutcome& outcome, const MaturityModel& model,
                                    const ConsolidatedResponse& resp, std::vector<std::string> raters,
                                    ConsolidationRule rule) {
  AssessmentReport r;
  r.model_id = model.id;
  r.model_name = model.name;
  r.organization = resp.organization;
  r.raters = std::move(raters);
  r.consolidation = std::string(consolidation_name(rule));
  r.aml = outcome.aml;
  r.aml_name = outcome.aml_name;

  int blanks = 0;
  std::vector<int> failed_below;
  for (const auto& v : outcome.verdicts) {
    LevelRow row;
    row.index = v.level_index;
    row.name = model.find_level(v.level_index)->name;
    row.total = v.total_statements;
    row.agreed = v.agreed;
    row.threshold = v.pass_threshold;
    for (const auto& [gate, agreed] : v.gating_agreed) row.gates.push_back({gate, agreed, v.gating_threshold.at(gate)});
    row.blanks = v.blanks;
    row.passed = v.passed;
    blanks += v.blanks;
    if (!v.passed && v.level_index < outcome.aml) failed_below.push_back(v.level_index);
    r.levels.push_back(std::move(row));
  }

  if (!failed_below.empty()) {
    std::string list;
    for (int j : failed_below) list += (list.empty() ? "" : ", ") + std::to_string(j);
    r.notes.push_back("level" + std::string(failed_below.size() > 1 ? "s " : " ") + list +
                      " below the maturity level did not pass");
  }
  if (blanks > 0)
    r.notes.push_back(std::to_string(blanks) + " blank statement" + (blanks > 1 ? "s" : "") +
                      " scored as not agreed");
  return r;
}

namespace detail {

inline std::string pad(const std::string& s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

// Number of display columns, counting each UTF-8 code point once.
inline std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

inline std::string render_table(const std::vector<std::vector<std::string>>& rows, std::size_t left_aligned_cols) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) widths.push_back(0);
      widths[c] = std::max(widths[c], display_width(row[c]));
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line;
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      const auto& cell = rows[i][c];
      const std::size_t extra = cell.size() - display_width(cell);
      if (c) line += " | ";
      line += pad(cell, widths[c] + extra, c >= left_aligned_cols);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
    if (i == 0) {
      std::string rule;
      for (std::size_t c = 0; c < widths.size(); ++c) rule += (c ? "-+-" : "") + std::string(widths[c], '-');
      os << rule << '\n';
    }
  }
  return os.str();
}

// Integral values become JSON integers; everything else stays a double.
inline nlohmann::json number(double v) {
  if (std::isfinite(v) && std::floor(v) == v && std::fabs(v) < 9.0e15) return static_cast<std::int64_t>(v);
  return v;
}

inline nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? number(*v) : nlohmann::json(nullptr);
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

/// Fixed-width table, one row per level, then notes and the maturity level.
inline std::string emit_report_text(const AssessmentReport& r) {
  std::ostringstream os;
  os << "Model: " << r.model_name << " (" << r.model_id << ")\n";
  os << "Organization: " << (r.organization.empty() ? "-" : r.organization) << '\n';
  os << "Raters: ";
  for (std::size_t i = 0; i < r.raters.size(); ++i) os << (i ? ", " : "") << r.raters[i];
  os << '\n';
  os << "Consolidation: " << r.consolidation << "\n\n";

  std::vector<std::string> gate_names;
  if (!r.levels.empty())
    for (const auto& g : r.levels.front().gates) gate_names.push_back(g.activity);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"Level", "N", "NA", "PT"};
  for (const auto& g : gate_names) {
    header.push_back("NA_" + g);
    header.push_back("PT_" + g);
  }
  header.push_back("Pass");
  rows.push_back(header);
  for (const auto& l : r.levels) {
    std::vector<std::string> row{l.name, std::to_string(l.total), std::to_string(l.agreed), std::to_string(l.threshold)};
    for (const auto& g : l.gates) {
      row.push_back(std::to_string(g.agreed));
      row.push_back(std::to_string(g.threshold));
    }
    row.push_back(l.passed ? "PASS" : "FAIL");
    rows.push_back(std::move(row));
  }
  os << detail::render_table(rows, 1);

  if (!r.notes.empty()) {
    os << '\n';
    for (const auto& n : r.notes) os << "Note: " << n << '\n';
  }
  os << "\nAML: " << r.aml << " (" << r.aml_name << ")\n";
  return os.str();
}

inline nlohmann::json report_to_json(const AssessmentReport& r) {
  nlohmann::json j;
  j["model"] = {{"id", r.model_id}, {"name", r.model_name}};
  j["organization"] = r.organization;
  j["raters"] = r.raters;
  j["consolidation"] = r.consolidation;
  j["levels"] = nlohmann::json::array();
  for (const auto& l : r.levels) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& g : l.gates) gates.push_back({{"activity", g.activity}, {"agreed", g.agreed}, {"threshold", g.threshold}});
    j["levels"].push_back({{"index", l.index},
                           {"name", l.name},
                           {"total", l.total},
                           {"agreed", l.agreed},
                           {"threshold", l.threshold},
                           {"gates", gates},
                           {"blanks", l.blanks},
                           {"passed", l.passed}});
  }
  j["aml"] = r.aml;
  j["aml_name"] = r.aml_name;
  j["notes"] = r.notes;
  return j;
}

/// Key-sorted, newline-terminated JSON.
inline std::string emit_report_json(const AssessmentReport& r) { return detail::dump(report_to_json(r)); }

/// Inverse of emit_report_json. Throws ParseError on malformed input.
inline AssessmentReport parse_report_json(std::string_view document) {
  try {
    const auto j = nlohmann::json::parse(document);
    AssessmentReport r;
    r.model_id = j.at("model").at("id").get<std::string>();
    r.model_name = j.at("model").at("name").get<std::string>();
    r.organization = j.at("organization").get<std::string>();
    r.raters = j.at("raters").get<std::vector<std::string>>();
    r.consolidation = j.at("consolidation").get<std::string>();
    for (const auto& l : j.at("levels")) {
      LevelRow row;
      row.index = l.at("index").get<int>();
      row.name = l.at("name").get<std::string>();
      row.total = l.at("total").get<int>();
      row.agreed = l.at("agreed").get<int>();
      row.threshold = l.at("threshold").get<int>();
      for (const auto& g : l.at("gates"))
        row.gates.push_back({g.at("activity").get<std::string>(), g.at("agreed").get<int>(), g.at("threshold").get<int>()});
      row.blanks = l.at("blanks").get<int>();
      row.passed = l.at("passed").get<bool>();
      r.levels.push_back(std::move(row));
    }
    r.aml = j.at("aml").get<int>();
    r.aml_name = j.at("aml_name").get<std::string>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed report JSON: ") + e.what());
  }
}

inline nlohmann::json agreement_to_json(const AgreementResult& a) {
  nlohmann::json j;
  j["level"] = a.level_index;
  j["n_items"] = a.n_items;
  j["m_raters"] = a.m_raters;
  j["dropped_items"] = a.dropped_items;
  j["kendall_w"] = detail::optional_number(a.kendall_w);
  j["chi_square"] = detail::optional_number(a.chi_square);
  j["df"] = a.df;
  j["fleiss_kappa"] = detail::optional_number(a.fleiss_kappa);
  j["z"] = detail::optional_number(a.z);
  j["category"] = a.category ? nlohmann::json(std::string(category_name(*a.category))) : nlohmann::json(nullptr);
  j["degenerate_reason"] = a.degenerate_reason.empty() ? nlohmann::json(nullptr) : nlohmann::json(a.degenerate_reason);
  return j;
}

inline std::string emit_agreement_json(const AgreementResult& a) { return detail::dump(agreement_to_json(a)); }

inline std::string emit_agreement_json(std::span<const AgreementResult> results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : results) arr.push_back(agreement_to_json(a));
  return detail::dump(arr);
}

namespace detail {

inline std::optional<double> read_optional(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

inline AgreementResult agreement_from_json(const nlohmann::json& j) {
  AgreementResult a;
  a.level_index = j.at("level").get<int>();
  a.n_items = j.at("n_items").get<int>();
  a.m_raters = j.at("m_raters").get<int>();
  a.dropped_items = j.at("dropped_items").get<std::vector<std::string>>();
  a.kendall_w = read_optional(j, "kendall_w");
  a.chi_square = read_optional(j, "chi_square");
  a.df = j.at("df").get<int>();
  a.fleiss_kappa = read_optional(j, "fleiss_kappa");
  a.z = read_optional(j, "z");
  if (!j.at("category").is_null()) {
    a.category = category_from_name(j.at("category").get<std::string>());
    if (!a.category) throw ParseError(1, "unknown agreement category");
  }
  if (!j.at("degenerate_reason").is_null()) a.degenerate_reason = j.at("degenerate_reason").get<std::string>();
  return a;
}

}  // namespace detail

inline AgreementResult parse_agreement_json(std::string_view document) {
  try {
    return detail::agreement_from_json(nlohmann::json::parse(document));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed agreement JSON: ") + e.what());
  }
}

inline std::vector<AgreementResult> parse_agreement_json_list(std::string_view document) {
  try {
    std::vector<AgreementResult> out;
    for (const auto& j : nlohmann::json::parse(document)) out.push_back(detail::agreement_from_json(j));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed agreement JSON: ") + e.what());
  }
}

/// One row per level with significance markers and the kappa benchmark
/// category.
inline std::string emit_agreement_text(std::span<const AgreementResult> results, const MaturityModel& model) {
  auto fixed = [](const std::optional<double>& v, int digits) -> std::string {
    if (!v) return "n/a";
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << *v;
    return os.str();
  };
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Level", "n", "m", "W", "Chi2", "df", "Kappa", "Z", "Category"});
  std::vector<std::string> extra;
  for (const auto& a : results) {
    const Level* l = model.find_level(a.level_index);
    std::string chi = fixed(a.chi_square, 2);
    if (a.chi_square) chi += significance_marker(chi_square_significance(*a.chi_square, a.df));
    std::string z = fixed(a.z, 2);
    if (a.z) z += significance_marker(z_significance(*a.z));
    rows.push_back({l ? l->name : "Level " + std::to_string(a.level_index), std::to_string(a.n_items),
                    std::to_string(a.m_raters), fixed(a.kendall_w, 2), chi, std::to_string(a.df),
                    fixed(a.fleiss_kappa, 2), z, a.category ? std::string(category_name(*a.category)) : "n/a"});
    if (!a.dropped_items.empty()) {
      std::string ids;
      for (const auto& d : a.dropped_items) ids += (ids.empty() ? "" : ", ") + d;
      extra.push_back("Level " + std::to_string(a.level_index) + ": dropped incomplete items " + ids);
    }
    if (!a.degenerate_reason.empty()) extra.push_back("Level " + std::to_string(a.level_index) + ": " + a.degenerate_reason);
  }
  std::string out = detail::render_table(rows, 1);
  out += "\n* significant at P < 0.01   ** significant at P < 0.05\n";
  for (const auto& e : extra) out += "Note: " + e + '\n';
  return out;
}

}  // namespace apmm
