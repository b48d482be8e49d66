// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

// Inter-rater agreement per maturity level: Kendall's coefficient of
// concordance (tie-corrected) with its chi-square statistic, and Fleiss'
// kappa with the large-sample null Z statistic.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "apmm/error.hpp"
#include "apmm/model.hpp"
#include "apmm/response.hpp"

namespace apmm {

/// Items (rows) by raters (columns). Every cell holds a rating 0..4.
struct RatingMatrix {
  int level_index = 0;
  std::vector<std::string> items;
  std::vector<std::string> raters;
  std::vector<std::vector<int>> cells;  // cells[item][rater]
  std::vector<std::string> dropped_items;

  std::size_t n() const { return items.size(); }
  std::size_t m() const { return raters.size(); }
};

/// Builds the complete-case matrix for one level: any statement left blank by
/// at least one rater is dropped and reported in `dropped_items`.
inline RatingMatrix build_matrix(std::span<const ResponseSet> responses, int level_index,
                                 const MaturityModel& model) {
  if (responses.size() < 2) throw InputError("fewer than 2 raters");
  if (!model.find_level(level_index)) throw InputError("unknown level " + std::to_string(level_index));

  RatingMatrix mat;
  mat.level_index = level_index;
  for (const auto& r : responses) mat.raters.push_back(r.rater);

  for (const Statement* s : model.statements_at(level_index)) {
    std::vector<int> row;
    for (const auto& r : responses) {
      auto it = r.ratings.find(s->id);
      if (it == r.ratings.end() || !it->second) break;
      row.push_back(it->second->value());
    }
    if (row.size() == responses.size()) {
      mat.items.push_back(s->id);
      mat.cells.push_back(std::move(row));
    } else {
      mat.dropped_items.push_back(s->id);
    }
  }
  if (mat.items.size() < 2)
    throw InputError("level " + std::to_string(level_index) + " has fewer than 2 complete items after dropping blanks");
  return mat;
}

namespace detail {

inline void check_matrix(const RatingMatrix& mat) {
  if (mat.n() < 2) throw InputError("rating matrix needs at least 2 items");
  if (mat.m() < 2) throw InputError("rating matrix needs at least 2 raters");
  if (mat.cells.size() != mat.n()) throw InputError("rating matrix row count does not match item count");
  for (const auto& row : mat.cells) {
    if (row.size() != mat.m()) throw InputError("rating matrix row length does not match rater count");
    for (int v : row)
      if (v < 0 || v > 4) throw InputError("rating matrix cell " + std::to_string(v) + " is outside 0..4");
  }
}

// Mid-ranks (1-based) of one rater's column, plus sum(t^3 - t) over tie groups.
inline double rank_column(const RatingMatrix& mat, std::size_t rater, std::vector<double>& ranks) {
  const std::size_t n = mat.n();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return mat.cells[a][rater] < mat.cells[b][rater]; });
  double tie_sum = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && mat.cells[order[j + 1]][rater] == mat.cells[order[i]][rater]) ++j;
    const double mid = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
    const double t = static_cast<double>(j - i + 1);
    tie_sum += t * t * t - t;
    i = j + 1;
  }
  return tie_sum;
}

}  // namespace detail

struct KendallResult {
  double w = 0.0;
  double chi_square = 0.0;
  int df = 0;
};

/// Either a value or the reason it is undefined for this matrix.
template <typename T>
struct Statistic {
  std::optional<T> value;
  std::string degenerate_reason;

  bool degenerate() const { return !value.has_value(); }
};

inline Statistic<KendallResult> kendall_w(const RatingMatrix& mat) {
  detail::check_matrix(mat);
  const double n = static_cast<double>(mat.n());
  const double m = static_cast<double>(mat.m());

  std::vector<double> rank_sums(mat.n(), 0.0);
  std::vector<double> ranks(mat.n());
  double tie_total = 0.0;
  for (std::size_t r = 0; r < mat.m(); ++r) {
    tie_total += detail::rank_column(mat, r, ranks);
    for (std::size_t i = 0; i < mat.n(); ++i) rank_sums[i] += ranks[i];
  }

  const double mean = m * (n + 1.0) / 2.0;
  double s = 0.0;
  for (double rs : rank_sums) s += (rs - mean) * (rs - mean);

  const double denom = m * m * (n * n * n - n) - m * tie_total;
  if (denom <= 0.0)
    return {std::nullopt, "Kendall's W undefined: every rater gave all items the same rating"};

  KendallResult k;
  k.w = std::clamp(12.0 * s / denom, 0.0, 1.0);
  k.df = static_cast<int>(mat.n()) - 1;
  k.chi_square = m * (n - 1.0) * k.w;
  return {k, {}};
}

struct FleissResult {
  double kappa = 0.0;
  double z = 0.0;
};

/// Fleiss' kappa over the five rating categories, treating 0 as an ordinary
/// category. Z uses the large-sample standard error under the null
/// hypothesis of chance agreement.
inline Statistic<FleissResult> fleiss_kappa(const RatingMatrix& mat) {
  detail::check_matrix(mat);
  const double n = static_cast<double>(mat.n());
  const double m = static_cast<double>(mat.m());

  std::array<double, 5> totals{};
  double p_bar = 0.0;
  for (const auto& row : mat.cells) {
    std::array<double, 5> counts{};
    for (int v : row) counts[static_cast<std::size_t>(v)] += 1.0;
    double sq = 0.0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      sq += counts[j] * counts[j];
      totals[j] += counts[j];
    }
    p_bar += (sq - m) / (m * (m - 1.0));
  }
  p_bar /= n;

  double pe = 0.0, p3 = 0.0;
  for (double t : totals) {
    const double p = t / (n * m);
    pe += p * p;
    p3 += p * p * p;
  }
  if (pe >= 1.0) return {std::nullopt, "Fleiss' kappa undefined: a single category was used for every rating"};

  FleissResult f;
  f.kappa = (p_bar - pe) / (1.0 - pe);
  const double var_term = pe - (2.0 * m - 3.0) * pe * pe + 2.0 * (m - 2.0) * p3;
  if (var_term <= 0.0) return {std::nullopt, "Fleiss' kappa Z undefined: null variance is zero"};
  const double se0 = std::sqrt(2.0 / (n * m * (m - 1.0))) * std::sqrt(var_term) / (1.0 - pe);
  f.z = f.kappa / se0;
  return {f, {}};
}

enum class AgreementCategory { Poor, Moderate, Substantial, Excellent };

inline std::string_view category_name(AgreementCategory c) {
  switch (c) {
    case AgreementCategory::Poor: return "Poor";
    case AgreementCategory::Moderate: return "Moderate";
    case AgreementCategory::Substantial: return "Substantial";
    case AgreementCategory::Excellent: return "Excellent";
  }
  return "Poor";
}

inline std::optional<AgreementCategory> category_from_name(std::string_view s) {
  for (auto c : {AgreementCategory::Poor, AgreementCategory::Moderate, AgreementCategory::Substantial,
                 AgreementCategory::Excellent})
    if (category_name(c) == s) return c;
  return std::nullopt;
}

/// El Emam's kappa benchmark: <0.44 poor, [0.44,0.62) moderate,
/// [0.62,0.78] substantial, >0.78 excellent.
inline AgreementCategory emam_category(double kappa) {
  if (kappa < 0.44) return AgreementCategory::Poor;
  if (kappa < 0.62) return AgreementCategory::Moderate;
  if (kappa <= 0.78) return AgreementCategory::Substantial;
  return AgreementCategory::Excellent;
}

/// Significance of a statistic against upper-tail critical values. Markers
/// are "*" for p < 0.01 and "**" for p < 0.05.
enum class Significance { None, P05, P01 };

inline std::string_view significance_marker(Significance s) {
  switch (s) {
    case Significance::P01: return "*";
    case Significance::P05: return "**";
    case Significance::None: return "";
  }
  return "";
}

inline double chi_square_critical(int df, double alpha) {
  boost::math::chi_squared dist(static_cast<double>(df));
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

inline double z_critical(double alpha) {
  return boost::math::quantile(boost::math::complement(boost::math::normal(), alpha));
}

inline Significance chi_square_significance(double chi_square, int df) {
  if (chi_square > chi_square_critical(df, 0.01)) return Significance::P01;
  if (chi_square > chi_square_critical(df, 0.05)) return Significance::P05;
  return Significance::None;
}

inline Significance z_significance(double z) {
  if (z > z_critical(0.01)) return Significance::P01;
  if (z > z_critical(0.05)) return Significance::P05;
  return Significance::None;
}

/// Everything reported for one level.
struct AgreementResult {
  int level_index = 0;
  int n_items = 0;
  int m_raters = 0;
  std::vector<std::string> dropped_items;
  std::optional<double> kendall_w;
  std::optional<double> chi_square;
  int df = 0;
  std::optional<double> fleiss_kappa;
  std::optional<double> z;
  std::optional<AgreementCategory> category;
  std::string degenerate_reason;

  friend bool operator==(const AgreementResult&, const AgreementResult&) = default;
};

inline AgreementResult analyze_agreement(const RatingMatrix& mat) {
  AgreementResult out;
  out.level_index = mat.level_index;
  out.n_items = static_cast<int>(mat.n());
  out.m_raters = static_cast<int>(mat.m());
  out.dropped_items = mat.dropped_items;
  out.df = out.n_items - 1;

  std::vector<std::string> reasons;
  const auto k = kendall_w(mat);
  if (k.value) {
    out.kendall_w = k.value->w;
    out.chi_square = k.value->chi_square;
  } else {
    reasons.push_back(k.degenerate_reason);
  }
  const auto f = fleiss_kappa(mat);
  if (f.value) {
    out.fleiss_kappa = f.value->kappa;
    out.z = f.value->z;
    out.category = emam_category(f.value->kappa);
  } else {
    reasons.push_back(f.degenerate_reason);
  }
  for (const auto& r : reasons) out.degenerate_reason += (out.degenerate_reason.empty() ? "" : "; ") + r;
  return out;
}

inline AgreementResult analyze_agreement(std::span<const ResponseSet> responses, int level_index,
                                         const MaturityModel& model) {
  return analyze_agreement(build_matrix(responses, level_index, model));
}

}  // namespace apmm
