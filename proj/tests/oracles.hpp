// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

// Reference implementations used only by tests. Each one follows the
// textbook definition by a different route from the library code.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "apmm/model.hpp"
#include "apmm/response.hpp"

namespace apmm::oracle {

using Matrix = std::vector<std::vector<int>>;  // [item][rater]

/// Kendall's W via sum of squared rank totals:
///   W = (12 * sum R_i^2 - 3 m^2 n (n+1)^2) / (m^2 (n^3 - n) - m * sum T)
/// Mid-ranks by counting: rank(x) = #{y < x} + (#{y == x} + 1) / 2.
inline std::optional<double> kendall_w(const Matrix& cells) {
  const std::size_t n = cells.size(), m = cells.front().size();
  std::vector<double> totals(n, 0.0);
  double tie_sum = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    std::map<int, int> freq;
    for (std::size_t i = 0; i < n; ++i) ++freq[cells[i][r]];
    for (auto [value, t] : freq) tie_sum += static_cast<double>(t) * t * t - t;
    for (std::size_t i = 0; i < n; ++i) {
      int below = 0, equal = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (cells[k][r] < cells[i][r]) ++below;
        if (cells[k][r] == cells[i][r]) ++equal;
      }
      totals[i] += below + (equal + 1) / 2.0;
    }
  }
  double sum_sq = 0.0;
  for (double t : totals) sum_sq += t * t;
  const double dn = static_cast<double>(n), dm = static_cast<double>(m);
  const double denom = dm * dm * (dn * dn * dn - dn) - dm * tie_sum;
  if (denom == 0.0) return std::nullopt;
  return (12.0 * sum_sq - 3.0 * dm * dm * dn * (dn + 1.0) * (dn + 1.0)) / denom;
}

struct Fleiss {
  double kappa;
  double z;
};

/// Fleiss' kappa where observed agreement is the fraction of agreeing ordered
/// rater pairs per item, and chance agreement is the probability that two
/// draws (with replacement) from the pooled ratings match.
inline std::optional<Fleiss> fleiss(const Matrix& cells) {
  const std::size_t n = cells.size(), m = cells.front().size();
  double observed = 0.0;
  for (const auto& row : cells) {
    int agree = 0;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (a != b && row[a] == row[b]) ++agree;
    observed += static_cast<double>(agree) / static_cast<double>(m * (m - 1));
  }
  observed /= static_cast<double>(n);

  std::vector<int> pool;
  for (const auto& row : cells) pool.insert(pool.end(), row.begin(), row.end());
  double chance = 0.0;
  for (int x : pool)
    for (int y : pool)
      if (x == y) chance += 1.0;
  chance /= static_cast<double>(pool.size()) * static_cast<double>(pool.size());
  if (chance == 1.0) return std::nullopt;

  std::map<int, double> prop;
  for (int x : pool) prop[x] += 1.0 / static_cast<double>(pool.size());
  double cube = 0.0;
  for (auto [c, p] : prop) cube += p * p * p;
  const double dn = static_cast<double>(n), dm = static_cast<double>(m);
  const double variance = 2.0 / (dn * dm * (dm - 1.0)) *
                          (chance - (2.0 * dm - 3.0) * chance * chance + 2.0 * (dm - 2.0) * cube) /
                          ((1.0 - chance) * (1.0 - chance));
  const double kappa = (observed - chance) / (1.0 - chance);
  return Fleiss{kappa, kappa / std::sqrt(variance)};
}

/// Literal reading of the rating method: a level passes when at least
/// round(0.8 * N) statements are rated >= 3 or 0 and, for each gating
/// activity, at least round(0.8 * N_gate) of its statements are.
inline int maturity_level(const MaturityModel& model, const std::map<std::string, Cell>& ratings) {
  const double ratio = model.pass_ratio.value();
  auto agreed = [&](const Statement& s) {
    auto it = ratings.find(s.id);
    if (it == ratings.end() || !it->second) return false;
    const int v = it->second->value();
    return v >= 3 || v == 0;
  };
  int best = 0;
  for (const auto& level : model.levels) {
    int total = 0, hit = 0;
    for (const auto& s : model.statements)
      if (s.level_index == level.index) {
        ++total;
        hit += agreed(s);
      }
    bool pass = hit >= static_cast<int>(std::floor(total * ratio + 0.5));
    for (const auto& a : model.activities) {
      if (!a.gating) continue;
      int gt = 0, gh = 0;
      for (const auto& s : model.statements)
        if (s.level_index == level.index && s.activity_id == a.id) {
          ++gt;
          gh += agreed(s);
        }
      pass = pass && gh >= static_cast<int>(std::floor(gt * ratio + 0.5));
    }
    if (pass) best = std::max(best, level.index);
  }
  return best;
}

/// Consolidation by case analysis on the multiset of submitted values.
inline Cell consolidate(std::vector<Cell> submitted) {
  std::vector<int> zeros, nonzero;
  for (const auto& c : submitted) {
    if (!c) continue;
    (c->value() == 0 ? zeros : nonzero).push_back(c->value());
  }
  if (nonzero.empty()) return zeros.empty() ? Cell{} : Cell{Rating(0)};
  std::sort(nonzero.begin(), nonzero.end());
  const std::size_t k = nonzero.size();
  return Rating(k % 2 == 1 ? nonzero[k / 2] : nonzero[k / 2 - 1]);
}

/// Random model with up to `max_levels` levels and `max_statements`
/// statements, at least one gating statement per level.
inline MaturityModel random_model(std::mt19937& rng, int max_levels, int max_statements) {
  std::uniform_int_distribution<int> levels_d(1, max_levels);
  MaturityModel m;
  m.id = "random";
  m.name = "Random";
  m.pass_ratio = PassRatio{8, 10};
  m.activities = {{"A", "Alpha", Dimension::ArchitectureDesign, false},
                  {"G", "Gate", Dimension::ProductLineManagement, true}};
  const int levels = levels_d(rng);
  for (int j = 1; j <= levels; ++j) m.levels.push_back({j, "L" + std::to_string(j)});
  int counter = 0;
  for (int j = 1; j <= levels; ++j) m.statements.push_back({"x" + std::to_string(++counter), j, "G", "gate"});
  std::uniform_int_distribution<int> extra_d(0, std::max(0, max_statements - levels));
  std::uniform_int_distribution<int> level_pick(1, levels);
  std::bernoulli_distribution coin(0.5);
  const int extra = extra_d(rng);
  for (int i = 0; i < extra; ++i)
    m.statements.push_back({"x" + std::to_string(++counter), level_pick(rng), coin(rng) ? "G" : "A", "s"});
  return m;
}

inline Cell random_cell(std::mt19937& rng, double blank_probability = 0.1) {
  std::bernoulli_distribution blank(blank_probability);
  std::uniform_int_distribution<int> value(0, 4);
  if (blank(rng)) return Cell{};
  return Rating(value(rng));
}

inline Matrix random_matrix(std::mt19937& rng, int max_n, int max_m, int categories = 5) {
  std::uniform_int_distribution<int> nd(2, max_n), md(2, max_m), vd(0, categories - 1);
  const int n = nd(rng), m = md(rng);
  Matrix cells(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m)));
  for (auto& row : cells)
    for (auto& v : row) v = vd(rng);
  return cells;
}

}  // namespace apmm::oracle
