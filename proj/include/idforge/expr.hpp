#pragma once

#include <string_view>

#include "idforge/rational.hpp"
#include "idforge/selem.hpp"

namespace idforge {

/// Parses and evaluates an element of S written with
///   rationals (n or n/m), s, t, dinv = (3s^2-1)^-1, + - * ^ and parentheses.
/// Exponents are non-negative integer literals. Throws ParseError carrying
/// the byte offset of the offending token; nothing is returned on error.
SElem<Rational> parse_b_expression(std::string_view text);

}  // namespace idforge
