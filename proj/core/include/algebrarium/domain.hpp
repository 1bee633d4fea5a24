#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace algebrarium {

enum class DomainId {
  EncryptedHistory = 0,
  Enigma = 1,
  Knitting = 2,
  RubiksCube = 3,
};

inline constexpr std::array<DomainId, 4> kAllDomains = {
    DomainId::EncryptedHistory, DomainId::Enigma, DomainId::Knitting, DomainId::RubiksCube};

enum class Cardinality { Finite, Infinite };

/// Carrier/signature/axiom summary for one of the four systems.
struct AlgebraSpec {
  DomainId domain;
  Cardinality cardinality;
  bool commutative;
  std::string_view carrier;
  std::string_view operation;
  std::string_view inverse;
  std::string_view identity;
};

const AlgebraSpec& algebra_spec(DomainId d) noexcept;

/// Stable machine name used in JSONL and on the command line ("enigma", ...).
std::string_view to_string(DomainId d) noexcept;
/// Short prefix used in task ids ("eh", "enigma", "knit", "cube").
std::string_view short_name(DomainId d) noexcept;
/// Accepts the machine name or the short name.
std::optional<DomainId> parse_domain(std::string_view name) noexcept;

}  // namespace algebrarium
