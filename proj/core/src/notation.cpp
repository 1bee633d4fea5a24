#include "algebrarium/notation.hpp"

#include "algebrarium/cipher.hpp"
#include "algebrarium/cube.hpp"
#include "algebrarium/enigma.hpp"
#include "algebrarium/error.hpp"
#include "algebrarium/knitting.hpp"

namespace algebrarium {

Element parse_element(DomainId d, std::string_view text) {
  switch (d) {
    case DomainId::EncryptedHistory: return cipher::parse(text);
    case DomainId::Enigma: return enigma::parse(text);
    case DomainId::Knitting: return knitting::parse(text);
    case DomainId::RubiksCube: return cube::parse(text);
  }
  throw Error(ErrorCode::DomainError, "unknown domain");
}

std::optional<Element> try_parse_element(DomainId d, std::string_view text) noexcept {
  try {
    return parse_element(d, text);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string render(const Element& e) {
  switch (e.domain()) {
    case DomainId::EncryptedHistory: return cipher::render(e);
    case DomainId::Enigma: return enigma::render(e);
    case DomainId::Knitting: return knitting::render(e);
    case DomainId::RubiksCube: return cube::render(e);
  }
  return {};
}

}  // namespace algebrarium
