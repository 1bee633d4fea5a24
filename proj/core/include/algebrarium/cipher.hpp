#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "algebrarium/element.hpp"

// Encrypted History: signed offsets written as FWD(val) / BACK(val), where
// val is a base-7 magnitude spelled with the cipher alphabet a..g (0..6).
namespace algebrarium::cipher {

inline constexpr int kBase = 7;

constexpr char encode_digit(int digit) noexcept { return static_cast<char>('a' + digit); }

constexpr std::optional<int> decode_digit(char c) noexcept {
  if (c < 'a' || c > 'g') return std::nullopt;
  return c - 'a';
}

/// Decodes a nonempty cipher string; leading 'a' digits are allowed.
std::optional<std::int64_t> decode_magnitude(std::string_view val);
/// Base-7 spelling without leading 'a'; zero is "a".
std::string encode_magnitude(std::int64_t magnitude);

Element parse(std::string_view text);
std::string render(const Element& e);

}  // namespace algebrarium::cipher
