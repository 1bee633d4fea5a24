#include "algebrarium/knitting.hpp"

#include "algebrarium/error.hpp"

namespace algebrarium::knitting {

std::optional<std::string> reduce(std::string_view word) {
  std::string stack;
  stack.reserve(word.size());
  for (char c : word) {
    if (!is_letter(c)) return std::nullopt;
    if (!stack.empty() && stack.back() == inverse_letter(c)) {
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  return stack;
}

Element knit_reduce(std::string_view word) {
  if (word == kIdentityToken) return Element::identity(DomainId::Knitting);
  return Element::knit(word);
}

Element parse(std::string_view text) { return knit_reduce(text); }

std::string render(const Element& e) {
  const auto& letters = e.as<ReducedWord>().letters;
  return letters.empty() ? std::string(kIdentityToken) : letters;
}

}  // namespace algebrarium::knitting
