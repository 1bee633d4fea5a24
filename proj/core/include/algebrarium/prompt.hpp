#pragma once

#include <string>

#include "algebrarium/taskgen.hpp"

namespace algebrarium {

/// Fixed per-domain template: rulebook, the expression, boxed-answer instruction.
std::string render_prompt(const ExpressionTask& t);
std::string render_prompt(DomainId d, const AtomicStep& step);

}  // namespace algebrarium
