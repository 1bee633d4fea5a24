#pragma once

#include <span>

#include "algebrarium/element.hpp"

namespace algebrarium {

/// Canonical group product a ⊕ b. Throws DomainMismatch.
Element combine(const Element& a, const Element& b);
Element inverse(const Element& a);
Element identity(DomainId d);

/// x with a ⊕ x = b, i.e. inverse(a) ⊕ b.
Element solve_for_x(const Element& a, const Element& b);
/// x with x ⊕ a = b, i.e. b ⊕ inverse(a).
Element solve_right(const Element& a, const Element& b);

/// Left fold of combine. Throws EmptyChain / DomainMismatch.
Element fold_chain(std::span<const Element> operands);

}  // namespace algebrarium
