// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <optional>
#include <string_view>
#include <vector>

namespace apmm::text {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

/// Splits on '\n'. A trailing newline does not produce an extra empty line.
inline std::vector<std::string_view> split_lines(std::string_view doc) {
  std::vector<std::string_view> lines;
  while (!doc.empty()) {
    const auto nl = doc.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(doc);
      break;
    }
    lines.push_back(doc.substr(0, nl));
    doc.remove_prefix(nl + 1);
  }
  return lines;
}

inline std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

/// Whitespace tokenizer over a single line.
class Cursor {
 public:
  explicit Cursor(std::string_view line) : rest_(line) {}

  /// Next whitespace-delimited token, or empty at end of line.
  std::string_view word() {
    skip();
    std::size_t n = 0;
    while (n < rest_.size() && !is_space(rest_[n])) ++n;
    std::string_view w = rest_.substr(0, n);
    rest_.remove_prefix(n);
    return w;
  }

  /// Everything left on the line, trimmed.
  std::string_view rest() const { return trim(rest_); }

 private:
  void skip() {
    while (!rest_.empty() && is_space(rest_.front())) rest_.remove_prefix(1);
  }

  std::string_view rest_;
};

}  // namespace apmm::text
