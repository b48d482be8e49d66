// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "apmm/error.hpp"
#include "apmm/model.hpp"

namespace apmm {

/// A performance-scale rating, 0..4. Zero is "Doesn't Apply".
class Rating {
 public:
  static constexpr int kMin = 0;
  static constexpr int kMax = 4;

  constexpr Rating() = default;

  /// Throws InputError outside 0..4.
  explicit Rating(int value) : value_(static_cast<std::uint8_t>(value)) {
    if (value < kMin || value > kMax) throw InputError("rating " + std::to_string(value) + " is outside 0..4");
  }

  static std::optional<Rating> from_int(int value) {
    if (value < kMin || value > kMax) return std::nullopt;
    return Rating(value);
  }

  constexpr int value() const { return value_; }

  friend constexpr bool operator==(Rating, Rating) = default;
  friend constexpr auto operator<=>(Rating, Rating) = default;

 private:
  std::uint8_t value_ = 0;
};

/// A rating or a blank (statement left unanswered).
using Cell = std::optional<Rating>;

inline std::string_view rating_label(Rating r) {
  switch (r.value()) {
    case 0: return "Doesn't Apply";
    case 1: return "Not Agree";
    case 2: return "Partially Agree";
    case 3: return "Largely Agree";
    default: return "Completely Agree";
  }
}

/// Maps an agreement percentage onto the 1..4 scale using half-open bands
/// [0,33.3) [33.3,66.7) [66.7,80) [80,100]. Never yields 0: "Doesn't Apply"
/// is an explicit choice, not a percentage. Throws InputError outside [0,100].
inline Rating scale_from_percentage(double pct) {
  if (!(pct >= 0.0 && pct <= 100.0)) throw InputError("percentage " + std::to_string(pct) + " is outside [0, 100]");
  if (pct >= 80.0) return Rating(4);
  if (pct >= 66.7) return Rating(3);
  if (pct >= 33.3) return Rating(2);
  return Rating(1);
}

/// Agreed upon: Largely or Completely Agree, or Doesn't Apply (which counts
/// as a full rating).
constexpr bool is_agreed(Rating r) { return r.value() == 0 || r.value() >= 3; }

/// Blanks are never agreed.
constexpr bool is_agreed(const Cell& c) { return c.has_value() && is_agreed(*c); }

/// `n * ratio` rounded to the nearest integer, ties rounded up. Exact for
/// every decimal ratio.
inline int pass_threshold(int n, const PassRatio& ratio) {
  if (n < 0) throw InputError("statement count must be non-negative");
  const std::int64_t num = 2 * static_cast<std::int64_t>(n) * ratio.numerator + ratio.scale;
  const std::int64_t den = 2 * ratio.scale;
  return static_cast<int>(num / den);
}

}  // namespace apmm
