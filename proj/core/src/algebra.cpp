#include "algebrarium/algebra.hpp"

#include <algorithm>
#include <string>

#include "algebrarium/cube.hpp"
#include "algebrarium/error.hpp"
#include "algebrarium/knitting.hpp"

namespace algebrarium {
namespace {

void require_same_domain(const Element& a, const Element& b) {
  if (a.domain() != b.domain()) {
    throw Error(ErrorCode::DomainMismatch, std::string(to_string(a.domain())) + " vs " +
                                               std::string(to_string(b.domain())));
  }
}

}  // namespace

Element combine(const Element& a, const Element& b) {
  require_same_domain(a, b);
  switch (a.domain()) {
    case DomainId::EncryptedHistory: {
      std::int64_t sum = 0;
      if (__builtin_add_overflow(a.as<SignedOffset>().value, b.as<SignedOffset>().value, &sum)) {
        throw Error(ErrorCode::DomainError, "offset overflow");
      }
      return Element::offset(sum);
    }
    case DomainId::Enigma: {
      const auto& x = a.as<RotorTriple>().rotors;
      const auto& y = b.as<RotorTriple>().rotors;
      return Element::rotors(x[0] + y[0], x[1] + y[1], x[2] + y[2]);
    }
    case DomainId::Knitting:
      return Element::knit(a.as<ReducedWord>().letters + b.as<ReducedWord>().letters);
    case DomainId::RubiksCube: {
      std::vector<CubeToken> moves = a.as<MoveSequence>().moves;
      const auto& tail = b.as<MoveSequence>().moves;
      moves.insert(moves.end(), tail.begin(), tail.end());
      return Element::cube(moves);
    }
  }
  throw Error(ErrorCode::DomainError, "unknown domain");
}

Element inverse(const Element& a) {
  switch (a.domain()) {
    case DomainId::EncryptedHistory:
      if (a.as<SignedOffset>().value == INT64_MIN) throw Error(ErrorCode::DomainError, "offset overflow");
      return Element::offset(-a.as<SignedOffset>().value);
    case DomainId::Enigma: {
      const auto& r = a.as<RotorTriple>().rotors;
      return Element::rotors(26 - r[0], 26 - r[1], 26 - r[2]);
    }
    case DomainId::Knitting: {
      std::string word = a.as<ReducedWord>().letters;
      std::reverse(word.begin(), word.end());
      for (char& c : word) c = knitting::inverse_letter(c);
      return Element::knit(word);
    }
    case DomainId::RubiksCube: {
      std::vector<CubeToken> moves = a.as<MoveSequence>().moves;
      std::reverse(moves.begin(), moves.end());
      for (auto& m : moves) m.turns = static_cast<std::uint8_t>(4 - m.turns);
      // Reversal puts opposite-face pairs out of priority order.
      return Element::cube(moves);
    }
  }
  throw Error(ErrorCode::DomainError, "unknown domain");
}

Element identity(DomainId d) { return Element::identity(d); }

Element solve_for_x(const Element& a, const Element& b) {
  require_same_domain(a, b);
  return combine(inverse(a), b);
}

Element solve_right(const Element& a, const Element& b) {
  require_same_domain(a, b);
  return combine(b, inverse(a));
}

Element fold_chain(std::span<const Element> operands) {
  if (operands.empty()) throw Error(ErrorCode::EmptyChain, "fold_chain needs at least one operand");
  Element acc = operands.front();
  for (const auto& e : operands.subspan(1)) acc = combine(acc, e);
  return acc;
}

}  // namespace algebrarium
