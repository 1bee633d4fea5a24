#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "algebrarium/element.hpp"

// Knitting: the free group on k (knit) and p (purl); K and P are inverses.
namespace algebrarium::knitting {

/// Rendering of the empty word.
inline constexpr std::string_view kIdentityToken = "\xCE\xB5";  // "ε"

constexpr bool is_letter(char c) noexcept { return c == 'k' || c == 'p' || c == 'K' || c == 'P'; }

constexpr char inverse_letter(char c) noexcept {
  switch (c) {
    case 'k': return 'K';
    case 'K': return 'k';
    case 'p': return 'P';
    case 'P': return 'p';
    default: return c;
  }
}

/// Free reduction by a single left-to-right stack pass. Returns nullopt if the
/// word contains a character outside {k,p,K,P}.
std::optional<std::string> reduce(std::string_view word);

/// Reduced element; accepts "" and "ε" for the identity. Throws ParseError.
Element knit_reduce(std::string_view word);

Element parse(std::string_view text);
std::string render(const Element& e);

}  // namespace algebrarium::knitting
