#pragma once

#include <string_view>

#include "absirr/poly.hpp"

namespace absirr {

// Parses and expands an integer polynomial expression in x and y.
//
//   expr   := term (('+'|'-') term)*        (leading '-' allowed)
//   term   := factor ('*' factor)*
//   factor := base ('^' nonneg-integer)?
//   base   := integer | 'x' | 'y' | '(' expr ')'
//
// Whitespace is ignored. Implicit multiplication ("2x") is rejected.
// Throws ParseError carrying the offending character offset.
PolyZ parse_poly(std::string_view text);

}  // namespace absirr
