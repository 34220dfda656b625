#pragma once

#include <string>
#include <vector>

#include "delpair/base_ring.hpp"
#include "delpair/mpoly.hpp"

namespace delpair {

// Polynomial expression over the given variables plus the base-ring
// variable (which lands in the coefficients). Grammar: + - * ^ and
// parentheses, integer and p/q literals, explicit '*' between factors.
MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                 const BaseRing& ring);

// Fraction-field expression in the base-ring variable only ('/' allowed
// between arbitrary subexpressions).
RatFunc parse_scalar(const std::string& text, const BaseRing& ring);

// Canonical text for a base-ring / fraction-field value.
std::string scalar_text(const RatFunc& x, const BaseRing& ring);

}  // namespace delpair
