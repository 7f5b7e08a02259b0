#pragma once

#include <optional>

#include "aode/ode.hpp"

namespace aode {

/// Affine solution space of a coefficient system: { base + sum l_i dirs[i] }.
struct AffineSpace {
    std::vector<Rational> base;
    std::vector<std::vector<Rational>> dirs;
};

struct SolveOutcome {
    std::vector<std::vector<Rational>> points;
    std::vector<AffineSpace> spaces;
    bool complete = true;
};

/// All rational solutions of a small polynomial system over Q, by linear
/// elimination, branching on univariate equations, and iterated resultants.
/// Positive-dimensional solution sets are returned as affine spaces when the
/// eliminations stayed affine; otherwise `complete` is cleared.
SolveOutcome solve_poly_system(std::vector<QPoly> eqs, int budget = 256);

/// One-parameter-or-more family of rational solutions: numerator and
/// denominator coefficients affine in parameters a1..ak.
struct SolutionFamily {
    UniPoly num_base;
    std::vector<UniPoly> num_dirs;
    UniPoly den_base;  // monic
    std::vector<UniPoly> den_dirs;
    size_t parameters() const { return num_dirs.size(); }
    std::string str() const;
};

struct SolutionSet {
    std::vector<RatFunc> solutions;
    std::vector<SolutionFamily> families;
    int search_cap = 0;
    std::optional<Rational> theoretical_bound;
    bool complete_up_to_cap = false;
};

/// All rational solutions r with max(deg num, deg den) <= cap, by
/// undetermined-coefficient ansatz over every (deg p, deg q) cell in
/// nondecreasing max order. Every returned solution satisfies
/// verify_solution; families are verified symbolically.
SolutionSet find_rational_solutions(const DiffPoly& f, int cap);

}  // namespace aode
