// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "apmm/builtin_model.hpp"
#include "apmm/rating_engine.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace apmm {
namespace {

using testing::org_a;
using testing::org_b;
using testing::uniform;

TEST(CountAgreed, OrgA) {
  const auto& m = builtin_model();
  const auto a = org_a();
  const int na[] = {0, 9, 22, 17, 10};
  const int na_vm[] = {0, 3, 4, 4, 3};
  for (int j = 1; j <= 5; ++j) {
    EXPECT_EQ(count_agreed(a, j, m), na[j - 1]) << "level " << j;
    EXPECT_EQ(count_agreed(a, j, m, "VM"), na_vm[j - 1]) << "level " << j;
  }
}

TEST(CountAgreed, AllBlankIsZero) {
  const auto& m = builtin_model();
  const auto blank = uniform(m, Cell{});
  for (int j = 1; j <= 5; ++j) EXPECT_EQ(count_agreed(blank, j, m), 0);
  ConsolidatedResponse empty;
  EXPECT_EQ(count_agreed(empty, 3, m), 0);
}

TEST(CountAgreed, UnknownLevelOrActivity) {
  const auto& m = builtin_model();
  EXPECT_THROW(count_agreed(org_a(), 6, m), InputError);
  EXPECT_THROW(count_agreed(org_a(), 1, m, "XX"), InputError);
}

TEST(EvaluateLevel, OrgALevelFourPasses) {
  const auto v = evaluate_level(org_a(), 4, builtin_model());
  EXPECT_EQ(v.total_statements, 20);
  EXPECT_EQ(v.agreed, 17);
  EXPECT_EQ(v.pass_threshold, 16);
  EXPECT_EQ(v.gating_agreed.at("VM"), 4);
  EXPECT_EQ(v.gating_threshold.at("VM"), 3);
  EXPECT_EQ(v.blanks, 0);
  EXPECT_TRUE(v.passed);
}

TEST(EvaluateLevel, OrgALevelFiveFails) {
  const auto v = evaluate_level(org_a(), 5, builtin_model());
  EXPECT_EQ(v.agreed, 10);
  EXPECT_EQ(v.pass_threshold, 15);
  EXPECT_FALSE(v.passed);
}

TEST(EvaluateLevel, OrgBLevelThreeFailsBothTests) {
  const auto v = evaluate_level(org_b(), 3, builtin_model());
  EXPECT_EQ(v.agreed, 10);
  EXPECT_EQ(v.pass_threshold, 18);
  EXPECT_EQ(v.gating_agreed.at("VM"), 2);
  EXPECT_EQ(v.gating_threshold.at("VM"), 3);
  EXPECT_FALSE(v.passed);
}

TEST(EvaluateLevel, GateAloneCanFailALevel) {
  const auto& m = builtin_model();
  auto r = uniform(m, Rating(4));
  for (const auto* s : m.statements_at(3, "VM")) r.ratings[s->id] = Rating(2);
  const auto v = evaluate_level(r, 3, m);
  EXPECT_EQ(v.agreed, 18);
  EXPECT_GE(v.agreed, v.pass_threshold);
  EXPECT_EQ(v.gating_agreed.at("VM"), 0);
  EXPECT_FALSE(v.passed);
}

TEST(EvaluateLevel, BlanksDoNotReduceTheThreshold) {
  const auto& m = builtin_model();
  auto r = uniform(m, Rating(4));
  for (const auto* s : m.statements_at(1)) r.ratings[s->id] = Cell{};
  const auto v = evaluate_level(r, 1, m);
  EXPECT_EQ(v.blanks, 15);
  EXPECT_EQ(v.pass_threshold, 12);
  EXPECT_FALSE(v.passed);
}

TEST(MaturityLevel, OrgA) {
  const auto out = maturity_level(org_a(), builtin_model());
  EXPECT_EQ(out.aml, 4);
  EXPECT_EQ(out.aml_name, "Software Product Family");
  ASSERT_EQ(out.verdicts.size(), 5u);
  const bool passed[] = {false, false, true, true, false};
  for (int j = 0; j < 5; ++j) EXPECT_EQ(out.verdicts[j].passed, passed[j]) << "level " << j + 1;
}

TEST(MaturityLevel, OrgB) {
  const auto out = maturity_level(org_b(), builtin_model());
  EXPECT_EQ(out.aml, 2);
  EXPECT_EQ(out.aml_name, "Standardized Infrastructure");
}

TEST(MaturityLevel, OrgBFixtureCounts) {
  // Reference per-level counts, except level 5 VM: the reference value (1)
  // exceeds the level total (0), which no response can produce.
  const auto& m = builtin_model();
  const auto b = org_b();
  const int na[] = {9, 18, 10, 3, 0};
  const int na_vm[] = {0, 3, 2, 2, 0};
  for (int j = 1; j <= 5; ++j) {
    EXPECT_EQ(count_agreed(b, j, m), na[j - 1]) << "level " << j;
    EXPECT_EQ(count_agreed(b, j, m, "VM"), na_vm[j - 1]) << "level " << j;
  }
}

TEST(MaturityLevel, AllNotAgreeIsNotRated) {
  const auto out = maturity_level(uniform(builtin_model(), Rating(1)), builtin_model());
  EXPECT_EQ(out.aml, 0);
  EXPECT_EQ(out.aml_name, "Not Rated");
}

TEST(MaturityLevel, DoesntApplyCountsAsAgreed) {
  const auto out = maturity_level(uniform(builtin_model(), Rating(0)), builtin_model());
  EXPECT_EQ(out.aml, 5);
}

class RatingAlgebraProperty : public ::testing::Test {
 protected:
  std::mt19937 rng{20261016};
};

TEST_F(RatingAlgebraProperty, MatchesLiteralOracleOnSmallModels) {
  for (int trial = 0; trial < 2000; ++trial) {
    const auto model = oracle::random_model(rng, 3, 8);
    ASSERT_TRUE(validate_model(model).empty());
    ConsolidatedResponse r;
    for (const auto& s : model.statements) r.ratings[s.id] = oracle::random_cell(rng);
    ASSERT_EQ(maturity_level(r, model).aml, oracle::maturity_level(model, r.ratings)) << "trial " << trial;
  }
}

TEST_F(RatingAlgebraProperty, MatchesLiteralOracleOnCanonicalModel) {
  const auto& m = builtin_model();
  std::uniform_real_distribution<double> bias(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    // Skew towards agreement so that higher levels pass some of the time.
    const double p = bias(rng);
    std::bernoulli_distribution agree(p);
    ConsolidatedResponse r;
    for (const auto& s : m.statements) r.ratings[s.id] = agree(rng) ? Rating(3 + trial % 2) : oracle::random_cell(rng);
    ASSERT_EQ(maturity_level(r, m).aml, oracle::maturity_level(m, r.ratings));
  }
}

TEST_F(RatingAlgebraProperty, UpgradesNeverHurt) {
  for (int trial = 0; trial < 1500; ++trial) {
    const auto model = trial % 3 == 0 ? builtin_model() : oracle::random_model(rng, 3, 8);
    ConsolidatedResponse r;
    for (const auto& s : model.statements) r.ratings[s.id] = oracle::random_cell(rng, 0.2);
    std::vector<std::string> candidates;
    for (const auto& [id, c] : r.ratings)
      if (!is_agreed(c)) candidates.push_back(id);
    if (candidates.empty()) continue;
    const auto before = maturity_level(r, model);
    const auto& pick = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    const int upgraded[] = {0, 3, 4};
    r.ratings[pick] = Rating(upgraded[std::uniform_int_distribution<int>(0, 2)(rng)]);
    const auto after = maturity_level(r, model);
    ASSERT_GE(after.aml, before.aml);
    for (std::size_t j = 0; j < before.verdicts.size(); ++j)
      ASSERT_FALSE(before.verdicts[j].passed && !after.verdicts[j].passed);
  }
}

TEST_F(RatingAlgebraProperty, IndependentOfStatementOrder) {
  for (int trial = 0; trial < 1000; ++trial) {
    auto model = trial % 4 == 0 ? builtin_model() : oracle::random_model(rng, 3, 8);
    ConsolidatedResponse r;
    for (const auto& s : model.statements) r.ratings[s.id] = oracle::random_cell(rng);
    const auto before = maturity_level(r, model);
    std::shuffle(model.statements.begin(), model.statements.end(), rng);
    std::shuffle(model.levels.begin(), model.levels.end(), rng);
    ASSERT_EQ(maturity_level(r, model), before);
  }
}

}  // namespace
}  // namespace apmm
