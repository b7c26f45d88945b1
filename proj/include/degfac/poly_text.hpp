#ifndef DEGFAC_POLY_TEXT_HPP
#define DEGFAC_POLY_TEXT_HPP

#include <string>

#include "degfac/sparse_poly.hpp"

namespace degfac {

/// Parses an expression over variables x1..xn with rational coefficients.
/// Supported syntax: + - * ^ and parentheses, e.g. "3/2*x1^2*x2 - x3 + 7"
/// or "(x1+1)^2*(x1+x2)". If arity < 0 it is inferred from the highest
/// variable index. Parse errors carry the character position.
SparsePoly parse_poly(const std::string& text, int arity = -1);

/// Canonical rendering: terms in descending graded-lex order, coefficients
/// as integers or p/q. Round-trips bit-exactly through parse_poly.
std::string print_poly(const SparsePoly& p);

}  // namespace degfac

#endif
