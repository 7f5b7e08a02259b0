#include "aode/curves.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "aode/factor.hpp"
#include "aode/heights.hpp"

namespace aode {

namespace {

template <class K>
MultiPoly<K> squarefree_part_in(const MultiPoly<K>& f, size_t var_idx) {
    MultiPoly<K> d = f.derivative(var_idx);
    if (d.is_zero()) return f.normalized();
    MultiPoly<K> g = multi_gcd(f, d);
    return g.is_constant() ? f.normalized() : f.divide_exact(g)->normalized();
}

template <class K>
bool is_squarefree_in(const MultiPoly<K>& f, size_t var_idx) {
    MultiPoly<K> d = f.derivative(var_idx);
    if (d.is_zero()) return f.degree(var_idx) == 0;
    return multi_gcd(f, d).is_constant();
}

}  // namespace

template <>
std::vector<Rational> field_roots<Rational>(const QPoly& f, size_t var_idx) {
    std::vector<Rational> out;
    if (f.is_zero() || f.degree(var_idx) <= 0) return out;
    for (const auto& [r, mult] : rational_roots(multi_to_unipoly(f, var_idx))) out.push_back(r);
    return out;
}

template <>
std::vector<RatFunc> field_roots<RatFunc>(const QtPoly& f, size_t var_idx) {
    std::vector<RatFunc> out;
    if (f.is_zero() || f.degree(var_idx) <= 0) return out;
    // Clear coefficient denominators; roots are unchanged by scaling.
    std::vector<RatFunc> coeffs;
    for (int k = 0; k <= f.degree(var_idx); ++k) {
        QtPoly ck = f.coeff_of(var_idx, k);
        if (ck.is_constant()) {
            coeffs.push_back(ck.is_zero() ? RatFunc() : ck.constant_term());
        } else {
            throw std::invalid_argument("field_roots: polynomial is not univariate");
        }
    }
    UniPoly den_lcm = UniPoly::constant(Rational(1), "t");
    for (const auto& c : coeffs) den_lcm = poly_lcm(den_lcm, c.den());
    std::vector<UniPoly> cleared;
    for (const auto& c : coeffs) cleared.push_back(c.num() * den_lcm.exact_div(c.den()));
    return poly_roots_in_qt(cleared);
}

template <class K>
Rational curve_height(const ProjPoly<K>& F);

template <>
Rational curve_height<Rational>(const ProjPoly<Rational>&) {
    return Rational(0);
}

template <>
Rational curve_height<RatFunc>(const ProjPoly<RatFunc>& F) {
    return height_poly(F.poly()).value();
}

template <class K>
ProjPoly<K> linear_change(const ProjPoly<K>& F, const Mat3K<K>& M) {
    if (mat3_det(M).is_zero()) throw PreconditionError("linear_change: singular matrix");
    const auto& vars = F.poly().vars();
    std::vector<MultiPoly<K>> forms;
    for (int j = 0; j < 3; ++j) {
        MultiPoly<K> lj(vars);
        for (int i = 0; i < 3; ++i)
            lj += MultiPoly<K>::variable(vars, i).scaled(M[i][j]);
        forms.push_back(lj);
    }
    return ProjPoly<K>(F.poly().compose(forms));
}

template <class K>
ProjPoly<K> standard_quadratic(const ProjPoly<K>& F) {
    const auto& vars = F.poly().vars();
    if (F.poly().term_count() == 1)
        throw PreconditionError("standard_quadratic: coordinate-line (monomial) input");
    auto x = [&](int i) { return MultiPoly<K>::variable(vars, i); };
    MultiPoly<K> g = F.poly().compose({x(1) * x(2), x(0) * x(2), x(0) * x(1)});
    for (size_t i = 0; i < 3; ++i) {
        const int m = g.min_exponent(i);
        if (m > 0) g = g.shift_down(i, m);
    }
    return ProjPoly<K>(std::move(g));
}

namespace {

// Chart matrix whose third row is p: sends (0,0,1) to p, invertible by
// construction (the rows are p plus two standard basis vectors).
template <class K>
Mat3K<K> chart_matrix(const ProjPoint<K>& p) {
    size_t k = 3;
    for (size_t i = 3; i-- > 0;) {
        if (p[i].is_one()) {
            k = i;
            break;
        }
    }
    Mat3K<K> M;
    for (auto& row : M)
        for (auto& e : row) e = FieldTraits<K>::zero();
    size_t row = 0;
    for (size_t i = 0; i < 3; ++i) {
        if (i == k) continue;
        M[row][i] = FieldTraits<K>::one();
        ++row;
    }
    for (size_t j = 0; j < 3; ++j) M[2][j] = p[j];
    return M;
}

// Local form of F at p: chart with p at the origin of (x0, x1).
template <class K>
MultiPoly<K> local_chart(const ProjPoly<K>& F, const ProjPoint<K>& p) {
    ProjPoly<K> G = linear_change(F, chart_matrix(p));
    return G.poly().partial_eval(2, FieldTraits<K>::one());
}

template <class K>
int order_at_origin(const MultiPoly<K>& f) {
    int r = -1;
    for (const auto& [e, c] : f.terms()) {
        const int d = e[0] + e[1];
        r = (r < 0) ? d : std::min(r, d);
    }
    return r;  // -1 for the zero polynomial
}

}  // namespace

template <class K>
int multiplicity(const ProjPoly<K>& F, const ProjPoint<K>& p) {
    MultiPoly<K> f = local_chart(F, p);
    const int r = order_at_origin(f);
    return r < 0 ? 0 : r;
}

template <class K>
MultiPoly<K> tangent_cone(const ProjPoly<K>& F, const ProjPoint<K>& p) {
    MultiPoly<K> f = local_chart(F, p);
    const int r = order_at_origin(f);
    MultiPoly<K> cone(f.vars());
    for (const auto& [e, c] : f.terms())
        if (e[0] + e[1] == r) cone.set_term(e, c);
    return cone;
}

template <class K>
bool is_ordinary(const ProjPoly<K>& F, const ProjPoint<K>& p, int r) {
    if (r < 2) throw PreconditionError("is_ordinary: multiplicity must be at least 2");
    if (multiplicity(F, p) != r)
        throw PreconditionError("is_ordinary: multiplicity mismatch");
    MultiPoly<K> cone = tangent_cone(F, p);
    // Binary form in (x0, x1): squarefree iff neither variable divides it
    // twice and the dehomogenized part is squarefree.
    for (size_t i = 0; i < 2; ++i)
        if (cone.min_exponent(i) >= 2) return false;
    MultiPoly<K> c = cone;
    for (size_t i = 0; i < 2; ++i) {
        const int m = c.min_exponent(i);
        if (m > 0) c = c.shift_down(i, m);
    }
    if (c.degree(0) == 0) return true;  // at most one stripped line remains
    MultiPoly<K> dehom = c.partial_eval(1, FieldTraits<K>::one());
    return is_squarefree_in(dehom, 0);
}

namespace {

template <class K>
struct AffinePoints {
    std::vector<std::pair<K, K>> points;
    int residual = 0;
};

// Common zeros over K of a system of polynomials in the two chart variables
// (all other exponents zero). Exact for K-rational points; conjugate
// solutions are tallied in `residual` by squarefree-degree bookkeeping.
template <class K>
AffinePoints<K> solve_affine_system(const std::vector<MultiPoly<K>>& polys_in, size_t xi,
                                    size_t yi, const char* who) {
    AffinePoints<K> out;
    std::vector<MultiPoly<K>> polys;
    for (const auto& p : polys_in)
        if (!p.is_zero()) polys.push_back(p);
    if (polys.empty()) throw PreconditionError(std::string(who) + ": degenerate system");

    // Eliminate yi by pairwise resultants; fall back to mixed combinations
    // when every direct pair degenerates.
    std::vector<MultiPoly<K>> elims;
    const std::string yname = polys[0].vars()[yi];
    auto try_elim = [&](const MultiPoly<K>& a, const MultiPoly<K>& b) {
        if (a.degree(yi) <= 0 && b.degree(yi) <= 0) return;
        MultiPoly<K> r = resultant(a, b, yname);
        if (!r.is_zero()) elims.push_back(std::move(r));
    };
    for (size_t i = 0; i < polys.size(); ++i)
        for (size_t j = i + 1; j < polys.size(); ++j) try_elim(polys[i], polys[j]);
    bool no_y = true;
    for (const auto& p : polys)
        if (p.degree(yi) > 0) no_y = false;
    if (no_y) {
        // System free of the second variable: finiteness requires no common
        // root, which the gcd detects.
        MultiPoly<K> g(polys[0].vars());
        for (const auto& p : polys) g = g.is_zero() ? p : multi_gcd(g, p);
        if (g.degree(xi) > 0)
            throw PreconditionError(std::string(who) + ": infinite solution set");
        return out;
    }
    if (elims.empty()) {
        // Generic combinations u = sum lam^i p_i, v = sum mu^i p_i still
        // contain all common zeros; retry over a deterministic ladder.
        for (long trial = 1; trial <= 12 && elims.empty(); ++trial) {
            const long lam = trial, mu = trial + 7;
            MultiPoly<K> u(polys[0].vars()), v(polys[0].vars());
            long lp = 1, mp = 1;
            for (const auto& p : polys) {
                u += p.scaled(FieldTraits<K>::from_long(lp));
                v += p.scaled(FieldTraits<K>::from_long(mp));
                lp *= lam;
                mp *= mu;
            }
            try_elim(u, v);
        }
        if (elims.empty())
            throw PreconditionError(std::string(who) + ": elimination degenerated");
    }
    MultiPoly<K> E(polys[0].vars());
    for (const auto& e : elims) {
        E = E.is_zero() ? e : multi_gcd(E, e);
        if (E.is_constant()) break;
    }
    if (E.is_constant()) return out;
    MultiPoly<K> sqfE = squarefree_part_in(E, xi);
    auto roots_x = field_roots<K>(sqfE, xi);
    out.residual += std::max(0, sqfE.degree(xi) - static_cast<int>(roots_x.size()));

    for (const auto& a : roots_x) {
        MultiPoly<K> fiber(polys[0].vars());
        bool all_zero = true;
        for (const auto& p : polys) {
            MultiPoly<K> fa = p.partial_eval(xi, a);
            if (fa.is_zero()) continue;
            all_zero = false;
            fiber = fiber.is_zero() ? fa : multi_gcd(fiber, fa);
            if (fiber.is_constant()) break;
        }
        if (all_zero) throw PreconditionError(std::string(who) + ": infinite solution set");
        if (fiber.is_constant()) continue;  // spurious eliminant root
        if (fiber.degree(yi) <= 0) continue;
        MultiPoly<K> sqf = squarefree_part_in(fiber, yi);
        auto roots_y = field_roots<K>(sqf, yi);
        out.residual += std::max(0, sqf.degree(yi) - static_cast<int>(roots_y.size()));
        for (const auto& b : roots_y) out.points.emplace_back(a, b);
    }
    return out;
}

// Rational zeros of a nonzero binary form in variables (i0, i1) of the
// projective ring, reported as pairs plus an irrational-degree tally.
template <class K>
AffinePoints<K> binary_form_zeros(const MultiPoly<K>& B, size_t i0, size_t i1) {
    AffinePoints<K> out;
    MultiPoly<K> C = B;
    if (C.min_exponent(i1) > 0) {
        out.points.emplace_back(FieldTraits<K>::one(), FieldTraits<K>::zero());  // (1 : 0)
        C = C.shift_down(i1, C.min_exponent(i1));
    }
    if (C.degree(i0) <= 0) return out;
    MultiPoly<K> dehom = C.partial_eval(i1, FieldTraits<K>::one());
    MultiPoly<K> sqf = squarefree_part_in(dehom, i0);
    auto roots = field_roots<K>(sqf, i0);
    out.residual += std::max(0, sqf.degree(i0) - static_cast<int>(roots.size()));
    for (const auto& a : roots) out.points.emplace_back(a, FieldTraits<K>::one());
    return out;
}

}  // namespace

template <class K>
SingularReport<K> find_singular_points(const ProjPoly<K>& F) {
    SingularReport<K> rep;
    const auto& vars = F.poly().vars();
    const int n = F.degree();
    std::vector<MultiPoly<K>> partials;
    for (size_t i = 0; i < 3; ++i) partials.push_back(F.poly().derivative(i));
    MultiPoly<K> g(vars);
    for (const auto& p : partials) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : multi_gcd(g, p);
        if (g.is_constant()) break;
    }
    if (!g.is_constant())
        throw PreconditionError("find_singular_points: repeated factor (reducible input)");

    std::vector<ProjPoint<K>> candidates;
    // Affine chart x2 = 1. By Euler's relation a common zero of the three
    // partials lies on the curve, so the partials are the whole system.
    {
        std::vector<MultiPoly<K>> sys;
        for (const auto& p : partials) sys.push_back(p.partial_eval(2, FieldTraits<K>::one()));
        auto sol = solve_affine_system<K>(sys, 0, 1, "find_singular_points");
        rep.residual_count += sol.residual;
        for (auto& [a, b] : sol.points)
            candidates.emplace_back(a, b, FieldTraits<K>::one());
    }
    // Line at infinity x2 = 0: common zeros of the restricted partials.
    {
        MultiPoly<K> ginf(vars);
        bool all_zero = true;
        for (const auto& p : partials) {
            MultiPoly<K> b = p.partial_eval(2, FieldTraits<K>::zero());
            if (b.is_zero()) continue;
            all_zero = false;
            ginf = ginf.is_zero() ? b : multi_gcd(ginf, b);
            if (ginf.is_constant()) break;
        }
        if (all_zero)
            throw PreconditionError("find_singular_points: degenerate at infinity");
        if (!ginf.is_constant()) {
            auto sol = binary_form_zeros<K>(ginf, 0, 1);
            rep.residual_count += sol.residual;
            for (auto& [a, b] : sol.points)
                candidates.emplace_back(a, b, FieldTraits<K>::zero());
        }
    }

    for (const auto& p : candidates) {
        const int r = multiplicity(F, p);
        if (r < 2) continue;
        rep.points.push_back({p, r, is_ordinary(F, p, r)});
    }
    std::sort(rep.points.begin(), rep.points.end(),
              [](const SingularPoint<K>& a, const SingularPoint<K>& b) {
                  if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
                  return a.point < b.point;
              });
    long weight = 0;
    for (const auto& sp : rep.points)
        weight += static_cast<long>(sp.multiplicity) * (sp.multiplicity - 1) / 2;
    if (weight > static_cast<long>(n - 1) * (n - 2) / 2)
        throw PreconditionError("find_singular_points: singularity weight exceeds genus bound "
                                "(reducible input)");
    return rep;
}

template <class K>
bool excellent_position_check(const ProjPoly<K>& F) {
    const ProjPoint<K> center(FieldTraits<K>::zero(), FieldTraits<K>::zero(),
                              FieldTraits<K>::one());
    const int r = multiplicity(F, center);
    if (r == 0) throw PreconditionError("excellent_position_check: (0,0,1) not on curve");
    const int n = F.degree();

    // (a) x2 = 0 meets the curve in n distinct non-fundamental points.
    MultiPoly<K> B = F.poly().partial_eval(2, FieldTraits<K>::zero());
    if (B.is_zero()) return false;
    if (B.min_exponent(0) > 0 || B.min_exponent(1) > 0) return false;  // fundamental point
    MultiPoly<K> dehom = B.partial_eval(1, FieldTraits<K>::one());
    if (!is_squarefree_in(dehom, 0)) return false;

    // (b) x0 = 0 and x1 = 0 meet the curve in n - r distinct points other
    // than fundamental points; intersection multiplicity exactly r at the
    // center forces the lines off the tangent cone.
    for (size_t line = 0; line < 2; ++line) {
        MultiPoly<K> C = F.poly().partial_eval(line, FieldTraits<K>::zero());
        if (C.is_zero()) return false;
        const size_t other = (line == 0) ? 1 : 0;
        const int e = C.min_exponent(other);
        if (e != r) return false;
        MultiPoly<K> Ct = C.shift_down(other, e);
        if (Ct.min_exponent(2) > 0) return false;  // passes through a fundamental point
        if (Ct.degree(other) > 0) {
            MultiPoly<K> d = Ct.partial_eval(2, FieldTraits<K>::one());
            if (!is_squarefree_in(d, other)) return false;
        }
    }
    return true;
}

template <class K>
CenteredQuadratic<K> centered_quadratic(const ProjPoly<K>& F, const ProjPoint<K>& c,
                                        uint64_t seed) {
    if (multiplicity(F, c) < 2)
        throw PreconditionError("centered_quadratic: center is not a singular point");
    std::mt19937_64 rng(seed);
    long bound = 5;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::uniform_int_distribution<long> dist(-bound, bound);
        Mat3K<K> M;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) M[i][j] = FieldTraits<K>::from_long(dist(rng));
        for (int j = 0; j < 3; ++j) M[2][j] = c[j];
        if (bound < (1L << 40)) bound *= 2;
        if (mat3_det(M).is_zero()) continue;
        ProjPoly<K> G = linear_change(F, M);
        if (!excellent_position_check(G)) continue;
        ProjPoly<K> Q = standard_quadratic(G);
        if (Q.degree() > 2 * F.degree() - 2)
            throw std::logic_error("centered_quadratic: degree bound violated");
        return {Q, M};
    }
    throw UnsupportedRangeError("centered_quadratic: excellent-position retry budget exhausted");
}

namespace {

Rational resolution_ledger(int i, int n, const Rational& TF0) {
    // N_i = 2^(i(i-1)/2) n^i max(8 n T(F0), T(D)) with no divisor in play.
    Rational r = pow2(static_cast<long>(i) * (i - 1) / 2);
    r *= Rational(n).pow(i);
    r *= Rational(8) * Rational(n) * TF0;
    return r;
}

}  // namespace

template <class K>
ResolutionTrace<K> resolve(const ProjPoly<K>& F, int max_steps, uint64_t seed) {
    ResolutionTrace<K> trace;
    const int n0 = F.degree();
    const Rational TF0 = curve_height(F);
    ProjPoly<K> cur = F;
    while (true) {
        SingularReport<K> rep = find_singular_points(cur);
        trace.residual_count_final = rep.residual_count;
        if (!rep.has_non_ordinary()) {
            trace.complete = (rep.residual_count == 0);
            break;
        }
        if (trace.s == max_steps) {
            trace.budget_exhausted = true;
            break;
        }
        // Points are sorted by multiplicity (desc) then canonical order.
        const ProjPoint<K>* center = nullptr;
        for (const auto& sp : rep.points)
            if (!sp.ordinary) {
                center = &sp.point;
                break;
            }
        auto step = centered_quadratic(cur, *center, seed + static_cast<uint64_t>(trace.s));
        ++trace.s;
        const int i = trace.s;
        const long degree_cap = static_cast<long>(n0) * (1L << i) - (1L << (i + 1)) + 2;
        if (step.curve.degree() > degree_cap)
            throw std::logic_error("resolve: degree ledger bound violated");
        trace.steps.push_back(
            {*center, step.curve, step.curve.degree(), resolution_ledger(i, n0, TF0)});
        cur = step.curve;
    }
    return trace;
}

template <class K>
int s_estimate(const ProjPoly<K>& F) {
    const int n = F.degree();
    const int fallback = (n - 1) * (n - 2) / 2;
    SingularReport<K> rep;
    try {
        rep = find_singular_points(F);
    } catch (const UnsupportedRangeError&) {
        return std::max(fallback, 0);
    }
    if (rep.residual_count > 0) return std::max(fallback, 0);
    int m = 0;
    long weight = 0;
    for (const auto& sp : rep.points) {
        if (!sp.ordinary) ++m;
        weight += static_cast<long>(sp.multiplicity) * (sp.multiplicity - 1) / 2;
    }
    if (m == 0) return 0;
    const long val = m + fallback - weight;
    return static_cast<int>(std::max(val, 0L));
}

template <class K>
std::vector<ProjPoint<K>> common_points(const ProjPoly<K>& F, const ProjPoly<K>& G) {
    if (!multi_gcd(F.poly(), G.poly()).is_constant())
        throw PreconditionError("common_points: curves share a factor");
    std::vector<ProjPoint<K>> pts;
    // Chart x2 = 1.
    {
        std::vector<MultiPoly<K>> sys{F.poly().partial_eval(2, FieldTraits<K>::one()),
                                      G.poly().partial_eval(2, FieldTraits<K>::one())};
        auto sol = solve_affine_system<K>(sys, 0, 1, "common_points");
        for (auto& [a, b] : sol.points) pts.emplace_back(a, b, FieldTraits<K>::one());
    }
    // Line at infinity.
    {
        MultiPoly<K> f0 = F.poly().partial_eval(2, FieldTraits<K>::zero());
        MultiPoly<K> g0 = G.poly().partial_eval(2, FieldTraits<K>::zero());
        MultiPoly<K> h(F.poly().vars());
        if (f0.is_zero())
            h = g0;
        else if (g0.is_zero())
            h = f0;
        else
            h = multi_gcd(f0, g0);
        if (!h.is_zero() && !h.is_constant()) {
            auto sol = binary_form_zeros<K>(h, 0, 1);
            for (auto& [a, b] : sol.points) {
                ProjPoint<K> p(a, b, FieldTraits<K>::zero());
                if (F.contains(p) && G.contains(p)) pts.push_back(p);
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Explicit instantiations.
#define AODE_INSTANTIATE(K)                                                                   \
    template ProjPoly<K> linear_change<K>(const ProjPoly<K>&, const Mat3K<K>&);               \
    template ProjPoly<K> standard_quadratic<K>(const ProjPoly<K>&);                           \
    template int multiplicity<K>(const ProjPoly<K>&, const ProjPoint<K>&);                    \
    template MultiPoly<K> tangent_cone<K>(const ProjPoly<K>&, const ProjPoint<K>&);           \
    template bool is_ordinary<K>(const ProjPoly<K>&, const ProjPoint<K>&, int);               \
    template SingularReport<K> find_singular_points<K>(const ProjPoly<K>&);                   \
    template bool excellent_position_check<K>(const ProjPoly<K>&);                            \
    template CenteredQuadratic<K> centered_quadratic<K>(const ProjPoly<K>&,                   \
                                                        const ProjPoint<K>&, uint64_t);       \
    template ResolutionTrace<K> resolve<K>(const ProjPoly<K>&, int, uint64_t);                \
    template int s_estimate<K>(const ProjPoly<K>&);                                           \
    template std::vector<ProjPoint<K>> common_points<K>(const ProjPoly<K>&, const ProjPoly<K>&);

AODE_INSTANTIATE(Rational)
AODE_INSTANTIATE(RatFunc)

#undef AODE_INSTANTIATE

}  // namespace aode
