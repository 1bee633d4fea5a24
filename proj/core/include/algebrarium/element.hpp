#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "algebrarium/domain.hpp"

namespace algebrarium {

struct SignedOffset {
  std::int64_t value = 0;
  friend auto operator<=>(const SignedOffset&, const SignedOffset&) = default;
};

struct RotorTriple {
  std::array<std::uint8_t, 3> rotors{};
  friend auto operator<=>(const RotorTriple&, const RotorTriple&) = default;
};

/// Freely reduced word over k, p and their inverses K, P.
struct ReducedWord {
  std::string letters;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

enum class Face : std::uint8_t { R, L, U, D, F, B };

struct CubeToken {
  Face face = Face::R;
  std::uint8_t turns = 1;  // quarter turns clockwise, 1..3
  friend auto operator<=>(const CubeToken&, const CubeToken&) = default;
};

struct MoveSequence {
  std::vector<CubeToken> moves;
  friend auto operator<=>(const MoveSequence&, const MoveSequence&) = default;
};

using Payload = std::variant<SignedOffset, RotorTriple, ReducedWord, MoveSequence>;

/// A group element in canonical form. The only way to build one is through
/// the named constructors, each of which canonicalizes its input, so two
/// Elements are equal exactly when they denote the same group element.
class Element {
public:
  static Element offset(std::int64_t value);
  static Element rotors(int r1, int r2, int r3);
  /// Throws ParseError on characters outside {k,p,K,P}.
  static Element knit(std::string_view word);
  static Element cube(std::span<const CubeToken> tokens);

  static Element identity(DomainId d);

  DomainId domain() const noexcept { return static_cast<DomainId>(payload_.index()); }
  const Payload& payload() const noexcept { return payload_; }

  template <typename T>
  const T& as() const {
    return std::get<T>(payload_);
  }

  bool is_identity() const;

  friend bool operator==(const Element&, const Element&) = default;

private:
  explicit Element(Payload p) : payload_(std::move(p)) {}
  Payload payload_;
};

}  // namespace algebrarium
