#pragma once

#include "aode/ode.hpp"
#include "aode/projective.hpp"

namespace aode {

/// Recursive-descent parser for the canonical expression grammar: integer
/// and rational literals, mode-specific variables, + - * ^ and parentheses.
/// Implicit multiplication is rejected; division is only available in the
/// rational-function modes. Errors carry line/column positions.

/// aode mode: variables t, y, y' (y'' and higher rejected).
DiffPoly parse_aode(const std::string& text);

/// curve mode: variables x0, x1, x2 over Q; must be homogeneous.
ProjPoly<Rational> parse_curve(const std::string& text);

/// ratfunc mode: variable t, division allowed.
RatFunc parse_ratfunc(const std::string& text);

/// Comma-separated list of ratfunc expressions.
std::vector<RatFunc> parse_point(const std::string& text);

/// Semicolon-separated rows of comma-separated ratfunc expressions (3x3).
std::array<std::array<RatFunc, 3>, 3> parse_matrix(const std::string& text);

/// poly mode: variables x0, x1, x2 with coefficients in Q(t) (division by
/// t-only subexpressions allowed).
QtPoly parse_poly_over_qt(const std::string& text);

/// algebraic mode: variables t, x over Q.
QPoly parse_algebraic(const std::string& text);

}  // namespace aode
