#pragma once

#include <vector>

#include "aode/errors.hpp"
#include "aode/multipoly.hpp"
#include "aode/unipoly.hpp"

namespace aode {

struct UniFactor {
    UniPoly poly;  // monic irreducible
    int multiplicity;
};

/// Complete factorization over Q into monic irreducibles (the leading
/// coefficient is dropped). Exact; throws UnsupportedRangeError when the
/// trial-factorization budget is exhausted.
std::vector<UniFactor> factor_unipoly(const UniPoly& f);

bool is_irreducible_unipoly(const UniPoly& f);

struct BiFactor {
    QPoly poly;  // graded-lex monic irreducible
    int multiplicity;
};

/// Complete factorization over Q of a polynomial using at most two
/// variables, via Kronecker substitution to the univariate case. The
/// constant multiplier is dropped.
std::vector<BiFactor> factor_bipoly(const QPoly& f);

/// True iff f (nonzero, total degree >= 1, at most two effective variables)
/// is irreducible in Q[vars].
bool is_irreducible_bipoly(const QPoly& f);

/// Exact polynomial square root over Q[vars]; nullopt when f is not a
/// perfect square.
std::optional<QPoly> sqrt_poly(const QPoly& f);

/// All monic divisors of f (products of irreducible factors up to their
/// multiplicities, constants dropped), including 1 and the full product.
/// Throws UnsupportedRangeError past `budget` divisors.
std::vector<QPoly> monic_divisors(const QPoly& f, size_t budget);

/// Roots in Q(t) of sum_i coeffs[i] * x^i with coeffs[i] in Q[t].
/// Exact and complete; throws UnsupportedRangeError on budget exhaustion.
std::vector<RatFunc> poly_roots_in_qt(const std::vector<UniPoly>& coeffs);

/// Irreducibility of f in Q(t)[y, y'] for f given as a polynomial in
/// Q[t, y, y'] (variable names "t", "y", "y'"). Exact within the supported
/// range (after content removal, degree <= 3 in y or in y'); outside it an
/// UnsupportedRangeError is raised rather than guessing.
bool is_irreducible_over_qt(const QPoly& f);

/// Spec surface: f over Q(t) in (y, y'); clears denominators and defers to
/// is_irreducible_over_qt.
bool is_irreducible_bivariate(const QtPoly& f);

/// Lift a polynomial over Q(t) in (main) variables to a primitive polynomial
/// over Q with "t" prepended to the variable list (denominators cleared,
/// Q[t]-content removed).
QPoly clear_denominators(const QtPoly& f);

/// Inverse view: move "t" into the coefficient field.
QtPoly to_qt_coeffs(const QPoly& f, const std::string& t_name = "t");

}  // namespace aode
