#pragma once

#include <optional>

#include "aode/bounds.hpp"
#include "aode/multipoly.hpp"

namespace aode {

inline const std::vector<std::string>& aode_vars() {
    static const std::vector<std::string> v{"t", "y", "y'"};
    return v;
}

/// First-order differential polynomial: an element of Q[t, y, y'] with
/// positive degree in y'.
class DiffPoly {
public:
    explicit DiffPoly(QPoly p);

    const QPoly& poly() const { return p_; }
    int d() const { return d_; }  // degree in y'

    /// a_i(t, y): coefficient of y'^i.
    QPoly coeff_a(int i) const { return p_.coeff_of(2, i); }

    /// Total degree of the trivariate polynomial (t included).
    int tdeg_all() const { return p_.total_degree(); }
    /// Total degree over (y, y') only.
    int tdeg_main() const { return p_.total_degree({1, 2}); }

    bool is_autonomous() const { return p_.degree(0) == 0; }

    friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.p_ == b.p_; }

    std::string str() const { return p_.str(); }

private:
    QPoly p_;
    int d_;
};

struct MSIndexEntry {
    int i;       // power of y'
    int deg_y;   // degree of a_i in y
    long value;  // deg(a_i, y) - 2(d - i)
};

struct MSIndexReport {
    std::vector<MSIndexEntry> per_i;  // nonzero a_i only
    long index = 0;
    bool positive = false;
};

MSIndexReport ms_index(const DiffPoly& f);

/// Support condition: some (i0, j0) in S(f) with i0+j0 >= i+j for all
/// support points and i0+2j0 > i+2j for every other support point.
bool is_maximally_comparable(const DiffPoly& f);

/// Result of the y = (cz+1)/z substitution: g(z, z') with
/// tdeg g = 2d + ms_index and deg(b_0, z) = 2d + ms_index.
struct NormalizedAODE {
    QPoly g;  // variables ("t", "z", "z'")
    Rational c;
    DiffPoly origin;

    /// View of g as a DiffPoly (z renamed back to y) for solving.
    DiffPoly as_diffpoly() const;
};

NormalizedAODE normalize(const DiffPoly& f);

/// Exact check of f(t, r, r') = 0.
bool verify_solution(const DiffPoly& f, const RatFunc& r);

enum class SMode { CurveDerived, WorstCase };

/// Full bound ledger for Theorem-style degree bounds on rational solutions.
/// Requires positive m.s.index. For autonomous inputs (T(f) = 0) the bound
/// is 0 and the irreducibility hypothesis is not consulted; otherwise f must
/// be irreducible over Q(t).
BoundReport degree_bound(const DiffPoly& f, SMode smode = SMode::WorstCase);

/// T(f) viewed over Q(t): height of the coefficient vector of f in (y, y').
Height diffpoly_height(const DiffPoly& f);

}  // namespace aode
