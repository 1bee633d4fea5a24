#include "algebrarium/element.hpp"

#include "algebrarium/cube.hpp"
#include "algebrarium/error.hpp"
#include "algebrarium/knitting.hpp"

namespace algebrarium {
namespace {

std::uint8_t mod26(int r) {
  int m = r % 26;
  return static_cast<std::uint8_t>(m < 0 ? m + 26 : m);
}

}  // namespace

Element Element::offset(std::int64_t value) { return Element(SignedOffset{value}); }

Element Element::rotors(int r1, int r2, int r3) {
  return Element(RotorTriple{{mod26(r1), mod26(r2), mod26(r3)}});
}

Element Element::knit(std::string_view word) {
  auto reduced = knitting::reduce(word);
  if (!reduced) throw Error(ErrorCode::ParseError, "illegal knitting letter in '" + std::string(word) + "'");
  return Element(ReducedWord{std::move(*reduced)});
}

Element Element::cube(std::span<const CubeToken> tokens) {
  return Element(MoveSequence{cube::canonical_moves(tokens)});
}

Element Element::identity(DomainId d) {
  switch (d) {
    case DomainId::EncryptedHistory: return Element(SignedOffset{});
    case DomainId::Enigma: return Element(RotorTriple{});
    case DomainId::Knitting: return Element(ReducedWord{});
    case DomainId::RubiksCube: return Element(MoveSequence{});
  }
  throw Error(ErrorCode::DomainError, "unknown domain");
}

bool Element::is_identity() const { return *this == identity(domain()); }

}  // namespace algebrarium
