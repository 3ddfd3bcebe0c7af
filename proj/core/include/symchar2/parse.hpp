#ifndef SYMCHAR2_PARSE_HPP
#define SYMCHAR2_PARSE_HPP

#include <string_view>
#include <vector>

#include "symchar2/factor.hpp"
#include "symchar2/poly.hpp"

namespace symchar2 {

// Expression grammar shared by scalars and polynomials:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' '-'? integer)?
//   primary := integer | 't' | 'x' | '(' expr ')'
// Integers denote bit-encoded GF(2^m) elements. Division and negative exponents need a nonzero constant operand.

/// Parses a polynomial in x, e.g. `x^6+x^5+t*x^2+(t^2+1)`. Throws ParseError.
Poly parse_poly(const Field& field, std::string_view text);
/// Parses an expression free of x, e.g. `(t^2+t+1)/(t)` or `t^-2+1`.
Scalar parse_scalar(const Field& field, std::string_view text);
/// Parses `(poly)^m * (poly)^m ...`; the exponent defaults to 1.
std::vector<ClaimedFactor> parse_factored(const Field& field, std::string_view text);

}  // namespace symchar2

#endif
