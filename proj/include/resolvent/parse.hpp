#ifndef RESOLVENT_PARSE_HPP
#define RESOLVENT_PARSE_HPP

#include <string>

#include "resolvent/multipoly.hpp"
#include "resolvent/rational.hpp"
#include "resolvent/unipoly.hpp"

namespace resolvent {

// Recursive-descent parser over the token set {number, variable, +, -, *, ^,
// parentheses}. Numbers may be "a" or "a/b"; juxtaposition multiplies
// ("4t^2"). Malformed input raises parse_error with the byte offset.
UniPoly<Rational> parse_poly(const std::string& text, const std::string& variable = "t");

// Same grammar with variables x1..xN.
MultiPoly<Rational> parse_multipoly(const std::string& text, int nvars);

}  // namespace resolvent

#endif
