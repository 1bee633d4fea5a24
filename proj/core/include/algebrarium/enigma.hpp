#pragma once

#include <string>
#include <string_view>

#include "algebrarium/element.hpp"

// Enigma: three independent rotors, Z26 x Z26 x Z26, written "R1,R2,R3".
namespace algebrarium::enigma {

inline constexpr int kModulus = 26;

Element parse(std::string_view text);
std::string render(const Element& e);

}  // namespace algebrarium::enigma
