#include "algebrarium/domain.hpp"

namespace algebrarium {
namespace {

constexpr std::array<AlgebraSpec, 4> kSpecs = {{
    {DomainId::EncryptedHistory, Cardinality::Infinite, true,
     "integers written FWD(val)/BACK(val), val in base 7 over a..g", "integer addition",
     "negation (FWD <-> BACK)", "FWD(a)"},
    {DomainId::Enigma, Cardinality::Finite, true, "Z26 x Z26 x Z26 written R1,R2,R3",
     "component-wise addition modulo 26", "component-wise negation modulo 26", "A,A,A"},
    {DomainId::Knitting, Cardinality::Infinite, false, "free group on k, p (inverses K, P)",
     "concatenation then cancellation of adjacent inverse pairs", "reverse and swap case",
     "empty word"},
    {DomainId::RubiksCube, Cardinality::Finite, false, "face-turn sequences over R L U D F B",
     "concatenation then canonical reduction", "reverse and invert each turn",
     "empty sequence"},
}};

}  // namespace

const AlgebraSpec& algebra_spec(DomainId d) noexcept { return kSpecs[static_cast<int>(d)]; }

std::string_view to_string(DomainId d) noexcept {
  switch (d) {
    case DomainId::EncryptedHistory: return "encrypted_history";
    case DomainId::Enigma: return "enigma";
    case DomainId::Knitting: return "knitting";
    case DomainId::RubiksCube: return "rubiks_cube";
  }
  return "unknown";
}

std::string_view short_name(DomainId d) noexcept {
  switch (d) {
    case DomainId::EncryptedHistory: return "eh";
    case DomainId::Enigma: return "enigma";
    case DomainId::Knitting: return "knit";
    case DomainId::RubiksCube: return "cube";
  }
  return "unknown";
}

std::optional<DomainId> parse_domain(std::string_view name) noexcept {
  for (DomainId d : kAllDomains) {
    if (name == to_string(d) || name == short_name(d)) return d;
  }
  return std::nullopt;
}

}  // namespace algebrarium
