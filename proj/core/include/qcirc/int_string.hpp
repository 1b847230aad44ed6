#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qcirc {

/// A finite string of integers such as (3, 2, 2).
struct IntString {
  std::vector<std::int64_t> entries;

  IntString() = default;
  IntString(std::initializer_list<std::int64_t> xs) : entries(xs) {}
  explicit IntString(std::vector<std::int64_t> xs) : entries(std::move(xs)) {}

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
  std::int64_t operator[](std::size_t i) const { return entries[i]; }

  /// The string read starting at position `start` and wrapping around.
  IntString rotated(std::size_t start) const;

  friend auto operator<=>(const IntString&, const IntString&) = default;
};

/// Comma-separated integers, e.g. "3,2,2". The empty text is the empty string.
IntString parse_int_string(std::string_view text);
std::string format_int_string(const IntString& s);

}  // namespace qcirc
