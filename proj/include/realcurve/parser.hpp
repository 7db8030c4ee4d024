#pragma once

#include <string_view>

#include "realcurve/bipoly.hpp"
#include "realcurve/function.hpp"

namespace realcurve {

/// Parse a polynomial in x and y. Grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := 'x' | 'y' | rational | '(' expr ')' | '-' factor
///
/// `rational` is an integer or p/q written without spaces. Whitespace is
/// ignored elsewhere. Throws ParseError with the offending offset.
BiPoly parse_poly(std::string_view src);

/// Parse numerator and denominator and build the element of K(X).
/// Throws ParseError, or NotInFunctionField if the denominator vanishes on
/// a component.
RatFuncOnCurve parse_ratfunc(std::string_view num, std::string_view den, const Curve& curve);

}  // namespace realcurve
