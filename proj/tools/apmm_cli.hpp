// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

// Command dispatch for the `apmm` tool. Kept separate from main() so tests
// can drive it with in-memory streams.

#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apmm/apmm.hpp"

namespace apmm::cli {

enum ExitStatus : int {
  kOk = 0,
  kUsage = 1,       // bad arguments or unparseable input
  kInvalidModel = 2,
  kBadInput = 3,    // inputs that cannot be assessed, e.g. < 2 raters
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(1, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MaturityModel resolve_model(const std::string& path) {
  if (path.empty()) return builtin_model();
  return load_model(read_file(path));
}

inline std::vector<ResponseSet> read_responses(const std::vector<std::string>& files, const MaturityModel& model,
                                               std::ostream& err) {
  std::vector<ResponseSet> out;
  bool failed = false;
  for (const auto& f : files) {
    auto parsed = parse_response_file(read_file(f), model);
    for (const auto& d : parsed.diagnostics) err << format_diagnostic(d, f) << '\n';
    if (!parsed.ok()) {
      failed = true;
      continue;
    }
    if (parsed.response.rater.empty()) parsed.response.rater = std::filesystem::path(f).stem().string();
    out.push_back(std::move(parsed.response));
  }
  if (failed) throw ParseError(1, "response files contain errors");
  return out;
}

inline void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw ParseError(1, "cannot write " + out_path);
  f << text;
}

inline std::string assess(const std::vector<ResponseSet>& responses, const MaturityModel& model,
                          ConsolidationRule rule, const std::string& format) {
  const auto consolidated = consolidate(responses, model, rule);
  const auto outcome = maturity_level(consolidated, model);
  std::vector<std::string> raters;
  for (const auto& r : responses) raters.push_back(r.rater);
  const auto report = make_report(outcome, model, consolidated, std::move(raters), rule);
  return format == "json" ? emit_report_json(report) : emit_report_text(report);
}

}  // namespace detail

/// Runs the tool. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Architecture process maturity assessment", "apmm"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string model_path;
  std::string rule_name = "median";
  std::string format = "text";
  std::string out_path;
  std::string level_arg = "all";
  double pct = 0.0;
  std::string demo_name;
  std::string model_file;

  auto* assess_cmd = app.add_subcommand("assess", "Consolidate, score and report one organization");
  assess_cmd->add_option("files", files, "Response files")->required();
  assess_cmd->add_option("--model", model_path, "Model-definition file (default: built-in model)");
  assess_cmd->add_option("--consolidation", rule_name, "median or first")->check(CLI::IsMember({"median", "first"}));
  assess_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  assess_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* agreement_cmd = app.add_subcommand("agreement", "Inter-rater agreement per level");
  agreement_cmd->add_option("files", files, "Response files (two or more raters)")->required();
  agreement_cmd->add_option("--model", model_path, "Model-definition file (default: built-in model)");
  agreement_cmd->add_option("--level", level_arg, "Level index or 'all'");
  agreement_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* scale_cmd = app.add_subcommand("scale", "Map an agreement percentage to a rating");
  scale_cmd->add_option("pct", pct, "Percentage, 0-100")->required();

  auto* model_cmd = app.add_subcommand("model", "Print or validate a model");
  model_cmd->require_subcommand(1);
  auto* show_cmd = model_cmd->add_subcommand("show", "Print the model document");
  show_cmd->add_option("file", model_file, "Model-definition file (default: built-in model)");
  auto* validate_cmd = model_cmd->add_subcommand("validate", "Check model invariants");
  validate_cmd->add_option("file", model_file, "Model-definition file (default: built-in model)");

  auto* demo_cmd = app.add_subcommand("demo", "Assess a bundled case study");
  demo_cmd->add_option("case", demo_name, "org-a or org-b")->required()->check(CLI::IsMember({"org-a", "org-b"}));
  demo_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    CLI::App* sub = &app;
    for (auto* s : app.get_subcommands()) sub = s;
    err << sub->help();
    return kUsage;
  }

  try {
    if (assess_cmd->parsed()) {
      const auto model = detail::resolve_model(model_path);
      const auto responses = detail::read_responses(files, model, err);
      const auto rule = *consolidation_from_name(rule_name);
      detail::write_output(detail::assess(responses, model, rule, format), out_path, out);
    } else if (agreement_cmd->parsed()) {
      const auto model = detail::resolve_model(model_path);
      const auto responses = detail::read_responses(files, model, err);
      std::vector<int> levels;
      if (level_arg == "all") {
        for (const auto& l : model.levels) levels.push_back(l.index);
        std::sort(levels.begin(), levels.end());
      } else {
        const auto v = text::parse_int(level_arg);
        if (!v) {
          err << "error: --level must be a level index or 'all'\n";
          return kUsage;
        }
        levels.push_back(*v);
      }
      std::vector<AgreementResult> results;
      for (int j : levels) results.push_back(analyze_agreement(responses, j, model));
      if (format == "json")
        out << (level_arg == "all" ? emit_agreement_json(results) : emit_agreement_json(results.front()));
      else
        out << emit_agreement_text(results, model);
    } else if (scale_cmd->parsed()) {
      if (!(pct >= 0.0 && pct <= 100.0)) {
        err << "error: percentage must be within 0-100\n";
        return kUsage;
      }
      const Rating r = scale_from_percentage(pct);
      out << r.value() << " (" << rating_label(r) << ")\n";
    } else if (model_cmd->parsed()) {
      const auto model = detail::resolve_model(model_file);
      if (show_cmd->parsed()) out << serialize_model(model);
      else out << "ok: " << model.id << " (" << model.levels.size() << " levels, " << model.statements.size()
               << " statements)\n";
    } else if (demo_cmd->parsed()) {
      const auto& model = builtin_model();
      const auto text = demo_name == "org-a" ? case_studies::kOrgA : case_studies::kOrgB;
      auto parsed = parse_response_file(text, model);
      std::vector<ResponseSet> responses{parsed.response};
      out << detail::assess(responses, model, ConsolidationRule::First, format);
    }
  } catch (const ValidationError& e) {
    err << "error: invalid model\n";
    for (const auto& v : e.violations()) err << "  " << v << '\n';
    return kInvalidModel;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}

}  // namespace apmm::cli
