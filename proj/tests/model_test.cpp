// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "apmm/builtin_model.hpp"
#include "apmm/model.hpp"

namespace apmm {
namespace {

bool mentions(const std::vector<std::string>& violations, const std::string& needle) {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

TEST(BuiltinModel, HasNinetyFiveStatements) {
  EXPECT_EQ(builtin_model().statements.size(), 95u);
}

TEST(BuiltinModel, LevelTotals) {
  const auto& m = builtin_model();
  const int expected[] = {15, 19, 22, 20, 19};
  for (int j = 1; j <= 5; ++j) EXPECT_EQ(m.statement_count(j), expected[j - 1]) << "level " << j;
}

TEST(BuiltinModel, PerLevelPerActivityCounts) {
  // Column order DE, RMM, CM, VM, AAE, AAM.
  const char* cols[] = {"DE", "RMM", "CM", "VM", "AAE", "AAM"};
  const int table[5][6] = {
      {2, 5, 2, 2, 2, 2}, {3, 4, 3, 3, 3, 3}, {4, 5, 2, 4, 4, 3}, {5, 3, 3, 4, 3, 2}, {4, 3, 3, 4, 3, 2},
  };
  const auto& m = builtin_model();
  for (int j = 1; j <= 5; ++j)
    for (int c = 0; c < 6; ++c)
      EXPECT_EQ(m.statement_count(j, cols[c]), table[j - 1][c]) << "level " << j << " " << cols[c];
}

TEST(BuiltinModel, SoftwarePlatformHasFourVariabilityStatements) {
  EXPECT_EQ(builtin_model().statement_count(3), 22);
  EXPECT_EQ(builtin_model().statement_count(3, "VM"), 4);
}

TEST(BuiltinModel, StatementTextIsVerbatim) {
  const Statement* s = builtin_model().find_statement("S.1.1.1");
  ASSERT_NE(s, nullptr);
  EXPECT_NE(s->text.find("ad hoc and as needed basis"), std::string::npos);
  EXPECT_EQ(builtin_model().find_statement("S.1.5.2")->text, "The SPLA does not define any variation points");
}

TEST(BuiltinModel, LevelsActivitiesAndGates) {
  const auto& m = builtin_model();
  ASSERT_EQ(m.levels.size(), 5u);
  EXPECT_EQ(m.levels.front().name, "Independent Product Development");
  EXPECT_EQ(m.levels.back().name, "Configurable Product Base");
  EXPECT_EQ(m.gating_activity_ids(), std::vector<std::string>{"VM"});
  EXPECT_EQ(m.pass_ratio, (PassRatio{8, 10}));

  EXPECT_EQ(m.find_activity("DE")->dimension, Dimension::ArchitectureDesign);
  EXPECT_EQ(m.find_activity("RMM")->dimension, Dimension::ArchitectureDesign);
  EXPECT_EQ(m.find_activity("AAE")->dimension, Dimension::ArchitectureDesign);
  EXPECT_EQ(m.find_activity("CM")->dimension, Dimension::ProductLineManagement);
  EXPECT_EQ(m.find_activity("VM")->dimension, Dimension::ProductLineManagement);
  EXPECT_EQ(m.find_activity("AAM")->dimension, Dimension::Documentation);
  EXPECT_EQ(m.activity_number("AAE"), 3);
  EXPECT_EQ(m.activity_number("VM"), 5);
}

TEST(BuiltinModel, IdsFollowLevelActivityNumbering) {
  const auto& m = builtin_model();
  std::set<std::string> ids;
  for (const auto& s : m.statements) {
    ids.insert(s.id);
    const std::string prefix = "S." + std::to_string(s.level_index) + "." + std::to_string(m.activity_number(s.activity_id)) + ".";
    EXPECT_EQ(s.id.rfind(prefix, 0), 0u) << s.id;
  }
  EXPECT_EQ(ids.size(), 95u);
}

TEST(ValidateModel, BuiltinIsValid) { EXPECT_TRUE(validate_model(builtin_model()).empty()); }

TEST(ValidateModel, NonContiguousLevels) {
  MaturityModel m = builtin_model();
  m.levels = {{1, "one"}, {3, "three"}};
  m.statements.erase(std::remove_if(m.statements.begin(), m.statements.end(),
                                    [](const Statement& s) { return s.level_index != 1 && s.level_index != 3; }),
                     m.statements.end());
  EXPECT_TRUE(mentions(validate_model(m), "non-contiguous level indices"));
}

TEST(ValidateModel, UnknownActivityNamesStatementAndActivity) {
  MaturityModel m = builtin_model();
  m.statements.push_back({"S.1.9.1", 1, "XX", "stray"});
  const auto v = validate_model(m);
  EXPECT_TRUE(mentions(v, "S.1.9.1"));
  EXPECT_TRUE(mentions(v, "\"XX\""));
}

TEST(ValidateModel, DuplicateStatementId) {
  MaturityModel m = builtin_model();
  m.statements.push_back(m.statements.front());
  EXPECT_TRUE(mentions(validate_model(m), "duplicate statement id S.1.1.1"));
}

TEST(ValidateModel, LevelWithoutGatingStatements) {
  MaturityModel m;
  m.id = "tiny";
  m.name = "Tiny";
  m.levels = {{1, "only"}};
  m.activities = {{"A", "a", Dimension::ArchitectureDesign, false}, {"VM", "v", Dimension::ProductLineManagement, true}};
  m.statements = {{"S.1.1.1", 1, "A", "text"}};
  EXPECT_TRUE(mentions(validate_model(m), "no statements for gating activity VM"));
}

TEST(ValidateModel, IdComponentsMustAgreeWithPlacement) {
  MaturityModel m = builtin_model();
  m.statements.push_back({"S.2.5.9", 3, "VM", "misplaced"});
  m.statements.push_back({"S.3.1.9", 3, "VM", "wrong activity number"});
  const auto v = validate_model(m);
  EXPECT_TRUE(mentions(v, "S.2.5.9 id names level 2"));
  EXPECT_TRUE(mentions(v, "S.3.1.9 id names activity number 1"));
}

TEST(ValidateModel, PassRatioRange) {
  MaturityModel m = builtin_model();
  m.pass_ratio = PassRatio{0, 1};
  EXPECT_TRUE(mentions(validate_model(m), "pass ratio"));
  m.pass_ratio = PassRatio{11, 10};
  EXPECT_TRUE(mentions(validate_model(m), "pass ratio 1.1"));
}

TEST(ValidateModel, IsPure) {
  MaturityModel m = builtin_model();
  m.levels.push_back({7, "gap"});
  m.statements.push_back({"dup", 1, "XX", ""});
  m.statements.push_back({"dup", 9, "DE", ""});
  EXPECT_EQ(validate_model(m), validate_model(m));
  EXPECT_FALSE(validate_model(m).empty());
}

TEST(PassRatio, ParsesDecimals) {
  EXPECT_EQ(PassRatio::parse("0.8"), (PassRatio{8, 10}));
  EXPECT_EQ(PassRatio::parse("0.80")->to_string(), "0.8");
  EXPECT_EQ(PassRatio::parse("1")->to_string(), "1");
  EXPECT_EQ(PassRatio::parse("0.05")->to_string(), "0.05");
  EXPECT_EQ(PassRatio::parse(".5")->to_string(), "0.5");
  EXPECT_FALSE(PassRatio::parse("-0.5"));
  EXPECT_FALSE(PassRatio::parse("8e-1"));
  EXPECT_FALSE(PassRatio::parse("1."));
  EXPECT_FALSE(PassRatio::parse(""));
}

}  // namespace
}  // namespace apmm
