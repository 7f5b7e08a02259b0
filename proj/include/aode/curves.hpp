#pragma once

#include <optional>

#include "aode/projective.hpp"
#include "aode/rational.hpp"

namespace aode {

template <class K>
struct SingularPoint {
    ProjPoint<K> point;
    int multiplicity;
    bool ordinary;
};

/// All singular points with coordinates in K, plus a degree-bookkeeping
/// count of conjugate singular points seen by elimination but not
/// representable over K.
template <class K>
struct SingularReport {
    std::vector<SingularPoint<K>> points;
    int residual_count = 0;
    bool has_non_ordinary() const {
        for (const auto& p : points)
            if (!p.ordinary) return true;
        return false;
    }
};

template <class K>
struct ResolutionStep {
    ProjPoint<K> center;
    ProjPoly<K> curve;
    int degree;
    Rational height_ledger;  // N_i = 2^(i(i-1)/2) n^i * 8n*T(F0)
};

template <class K>
struct ResolutionTrace {
    std::vector<ResolutionStep<K>> steps;
    int s = 0;
    bool complete = false;        // every remaining detected singularity is ordinary
    int residual_count_final = 0; // residual at termination
    bool budget_exhausted = false;
};

/// F((x0,x1,x2) M); degree and irreducibility preserved. Errors on singular M.
template <class K>
ProjPoly<K> linear_change(const ProjPoly<K>& F, const Mat3K<K>& M);

/// Substitute (x1x2, x0x2, x0x1) and strip the maximal monomial factor
/// x0^d0 x1^d1 x2^d2. Errors when F is a coordinate line.
template <class K>
ProjPoly<K> standard_quadratic(const ProjPoly<K>& F);

/// Multiplicity of the curve at p: 0 when p is off the curve, 1 at a simple
/// point, r >= 2 at an r-fold point.
template <class K>
int multiplicity(const ProjPoly<K>& F, const ProjPoint<K>& p);

/// Degree-r initial form at p (tangent cone), expressed in the chart that
/// moves p to (0,0,1); a binary form in (x0, x1).
template <class K>
MultiPoly<K> tangent_cone(const ProjPoly<K>& F, const ProjPoint<K>& p);

/// True iff the r tangents at an r-fold point are distinct (the tangent
/// cone is squarefree). Errors when r < 2 or multiplicity(F, p) != r.
template <class K>
bool is_ordinary(const ProjPoly<K>& F, const ProjPoint<K>& p, int r);

template <class K>
SingularReport<K> find_singular_points(const ProjPoly<K>& F);

/// Definition check at the center (0,0,1) (which must lie on F): the line
/// x2=0 meets F in n distinct non-fundamental points, and the lines x0=0,
/// x1=0 meet F in n-r distinct points other than fundamental points.
template <class K>
bool excellent_position_check(const ProjPoly<K>& F);

template <class K>
struct CenteredQuadratic {
    ProjPoly<K> curve;
    Mat3K<K> matrix;
};

/// Random seeded search for a change of coordinates centered at the singular
/// point c putting the curve in excellent position, followed by the standard
/// quadratic transformation. deg result <= 2 deg(F) - 2.
template <class K>
CenteredQuadratic<K> centered_quadratic(const ProjPoly<K>& F, const ProjPoint<K>& c,
                                        uint64_t seed);

/// Repeated centered quadratic transformations at the non-ordinary singular
/// point of largest multiplicity (canonical tie-break) until every detected
/// singular point is ordinary or max_steps is reached.
template <class K>
ResolutionTrace<K> resolve(const ProjPoly<K>& F, int max_steps, uint64_t seed = 0);

/// Upper bound on the number of quadratic transformations needed:
/// m + (n-1)(n-2)/2 - sum r(r-1)/2 with full singularity data (0 when all
/// detected singularities are ordinary), else the fallback (n-1)(n-2)/2.
template <class K>
int s_estimate(const ProjPoly<K>& F);

/// All common points with coordinates in K of two coprime curves.
template <class K>
std::vector<ProjPoint<K>> common_points(const ProjPoly<K>& F, const ProjPoly<K>& G);

/// Height of a curve's coefficient vector: height_poly for K = RatFunc,
/// 0 for K = Rational (constants).
template <class K>
Rational curve_height(const ProjPoly<K>& F);

/// Roots in K of a univariate (single effective variable) polynomial.
template <class K>
std::vector<K> field_roots(const MultiPoly<K>& f, size_t var_idx);

}  // namespace aode
