#ifndef SIGMA_PARSER_HPP
#define SIGMA_PARSER_HPP

#include <string>

#include "sigma/ambient.hpp"
#include "sigma/polynomial.hpp"

namespace sigma {

// Difference-polynomial text grammar:
//
//   poly    := [('+'|'-')] term (('+'|'-') term)*
//   term    := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//   factor  := var ['^' nat]
//   var     := ['s' nat '('] base [')']
//   base    := 'x' nat '_' nat | 'y' nat | 'iy' nat | 'idet'
//   coeff   := int ['/' posint]
//
// Whitespace is insignificant and 's0(b)' means 'b'. The y/iy indices are
// 1-based and run across the Ga and Gm factors in declaration order; x and
// idet refer to the unique GL_n factor.
Polynomial parse_diff_poly(const std::string& text, const AmbientSpec& ambient);

// Canonical printer: terms sorted descending, explicit coefficients,
// round-trips through parse_diff_poly.
std::string print_poly(const Polynomial& p, const AmbientSpec& ambient);

// Fallback used in diagnostics when no ambient is at hand.
std::string print_poly(const Polynomial& p);

std::string var_name(const AmbientSpec& ambient, VarId v);

}  // namespace sigma

#endif
