#include "algebrarium/prompt.hpp"

#include "algebrarium/notation.hpp"

namespace algebrarium {
namespace {

constexpr std::string_view kOp = " \xE2\x8A\x95 ";  // " ⊕ "

std::string_view rulebook(DomainId d) {
  switch (d) {
    case DomainId::EncryptedHistory:
      return "Encrypted History navigation. Each step is written DIR(val): DIR is FWD (positive) or BACK "
             "(negative), and val is a base-7 magnitude spelled with the cipher a=0, b=1, c=2, d=3, e=4, f=5, g=6, "
             "most significant digit first. Combining steps adds their signed values. Write the result as FWD(val) "
             "if it is positive or BACK(val) if it is negative, without leading 'a' digits; zero is written FWD(a).";
    case DomainId::Enigma:
      return "Enigma rotor states. A state is written R1,R2,R3 with letters A=0, B=1, ..., Z=25. Combining two "
             "states adds each rotor position independently modulo 26; there is no carry between rotors.";
    case DomainId::Knitting:
      return "Knitting instructions. Words use k (knit) and p (purl) and their inverses K (un-knit) and P "
             "(un-purl). Combining concatenates the words, then repeatedly cancels adjacent inverse pairs kK, Kk, "
             "pP and Pp until none remain. The empty word is written \xCE\xB5.";
    case DomainId::RubiksCube:
      return "Rubik's cube move sequences over the faces R, L, U, D, F, B. A bare letter is a 90-degree clockwise "
             "turn, X2 is a 180-degree turn and X# is a 90-degree counter-clockwise turn. Combining concatenates "
             "the sequences and reduces them to canonical form: a move followed by its inverse cancels, "
             "consecutive turns of the same face are summed modulo 4 (zero turns vanish), and adjacent opposite "
             "faces are ordered R before L, U before D, F before B. The empty sequence is written \xCE\xB5.";
  }
  return {};
}

std::string operand_text(const Element& e) {
  const std::string text = render(e);
  if (e.domain() == DomainId::Knitting || e.domain() == DomainId::RubiksCube) return "[" + text + "]";
  return text;
}

std::string assemble(DomainId d, const std::string& question) {
  std::string out(rulebook(d));
  out += "\n\n";
  out += question;
  out += "\n\nPut your final answer in \\boxed{}.";
  return out;
}

}  // namespace

std::string render_prompt(const ExpressionTask& t) {
  std::string question;
  if (t.mode == TaskMode::SolveEquation) {
    question = "Find X such that " + operand_text(t.operands[0]) + std::string(kOp) + "X = " +
               operand_text(t.operands[1]) + ".";
  } else {
    question = "Compute: ";
    for (std::size_t i = 0; i < t.operands.size(); ++i) {
      if (i) question += kOp;
      question += operand_text(t.operands[i]);
    }
  }
  return assemble(t.domain, question);
}

std::string render_prompt(DomainId d, const AtomicStep& step) {
  return assemble(d, "Compute: " + operand_text(step.left) + std::string(kOp) + operand_text(step.right));
}

}  // namespace algebrarium
