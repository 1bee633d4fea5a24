#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "algebrarium/element.hpp"

namespace algebrarium {

/// Parses text in the grammar of domain d. Throws ParseError.
Element parse_element(DomainId d, std::string_view text);
std::optional<Element> try_parse_element(DomainId d, std::string_view text) noexcept;
std::string render(const Element& e);

}  // namespace algebrarium
