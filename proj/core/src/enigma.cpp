#include "algebrarium/enigma.hpp"

#include "algebrarium/error.hpp"

namespace algebrarium::enigma {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Element parse(std::string_view text) {
  int r[3] = {0, 0, 0};
  int count = 0;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    auto field = trim(rest.substr(0, comma));
    if (count == 3 || field.size() != 1 || field[0] < 'A' || field[0] > 'Z') {
      throw Error(ErrorCode::ParseError, "expected three letters A-Z in '" + std::string(text) + "'");
    }
    r[count++] = field[0] - 'A';
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (count != 3) throw Error(ErrorCode::ParseError, "expected three rotors in '" + std::string(text) + "'");
  return Element::rotors(r[0], r[1], r[2]);
}

std::string render(const Element& e) {
  const auto& r = e.as<RotorTriple>().rotors;
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (i) out.push_back(',');
    out.push_back(static_cast<char>('A' + r[i]));
  }
  return out;
}

}  // namespace algebrarium::enigma
