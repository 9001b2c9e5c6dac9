#pragma once

#include <string>

#include "eiscong/polyfield.hpp"

namespace eiscong {

// Parses an arithmetic expression over Q(t).
//
// Grammar: integer literals, the variable t, binary + - * / ^ and unary -,
// parentheses.  '^' takes a nonnegative constant integer exponent (at most
// 999) and binds tighter than unary minus; '*' must be explicit ("2t" is a
// syntax error).  '-' and '/' associate left.  Errors carry the byte offset.
RatFunc parse_expression(const std::string& src);

// Canonical rendering; parse_expression(to_string(h)) == h.
std::string to_string(const RatFunc& h);
std::string to_string(const IntPoly& p);

}  // namespace eiscong
