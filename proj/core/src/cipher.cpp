#include "algebrarium/cipher.hpp"

#include <algorithm>
#include <limits>

#include "algebrarium/error.hpp"

namespace algebrarium::cipher {

std::optional<std::int64_t> decode_magnitude(std::string_view val) {
  if (val.empty()) return std::nullopt;
  std::int64_t n = 0;
  for (char c : val) {
    auto digit = decode_digit(c);
    if (!digit) return std::nullopt;
    if (n > (std::numeric_limits<std::int64_t>::max() - *digit) / kBase) return std::nullopt;
    n = n * kBase + *digit;
  }
  return n;
}

namespace {

std::string encode_unsigned(std::uint64_t magnitude) {
  if (magnitude == 0) return std::string(1, encode_digit(0));
  std::string out;
  for (auto m = magnitude; m > 0; m /= kBase) out.push_back(encode_digit(static_cast<int>(m % kBase)));
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::string encode_magnitude(std::int64_t magnitude) {
  return encode_unsigned(static_cast<std::uint64_t>(magnitude < 0 ? -magnitude : magnitude));
}

Element parse(std::string_view text) {
  auto fail = [&](const char* why) {
    return Error(ErrorCode::ParseError, std::string(why) + " in '" + std::string(text) + "'");
  };
  int sign = 0;
  std::string_view rest;
  if (text.starts_with("FWD(")) {
    sign = 1;
    rest = text.substr(4);
  } else if (text.starts_with("BACK(")) {
    sign = -1;
    rest = text.substr(5);
  } else {
    throw fail("expected FWD( or BACK(");
  }
  if (!rest.ends_with(')')) throw fail("missing ')'");
  rest.remove_suffix(1);
  auto magnitude = decode_magnitude(rest);
  if (!magnitude) throw fail("invalid cipher value");
  return Element::offset(sign * *magnitude);
}

std::string render(const Element& e) {
  const std::int64_t v = e.as<SignedOffset>().value;
  // Zero has no direction of its own; it is written as a forward step.
  const bool back = v < 0;
  const std::uint64_t mag = back ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  return (back ? "BACK(" : "FWD(") + encode_unsigned(mag) + ")";
}

}  // namespace algebrarium::cipher
