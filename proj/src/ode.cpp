#include "aode/ode.hpp"

#include <set>

#include "aode/curves.hpp"
#include "aode/factor.hpp"
#include "aode/projective.hpp"

namespace aode {

DiffPoly::DiffPoly(QPoly p) : p_(std::move(p)) {
    if (p_.vars() != aode_vars()) p_ = p_.with_vars(aode_vars());
    d_ = p_.degree(2);
    if (d_ < 1) throw PreconditionError("DiffPoly: degree in y' must be positive");
}

MSIndexReport ms_index(const DiffPoly& f) {
    MSIndexReport rep;
    const int d = f.d();
    bool first = true;
    for (int i = 0; i <= d; ++i) {
        QPoly ai = f.coeff_a(i);
        if (ai.is_zero()) continue;
        const int deg_y = std::max(ai.degree(1), 0);
        const long value = deg_y - 2L * (d - i);
        rep.per_i.push_back({i, deg_y, value});
        if (first || value > rep.index) rep.index = value;
        first = false;
    }
    rep.positive = rep.index > 0;
    return rep;
}

bool is_maximally_comparable(const DiffPoly& f) {
    // Support in the (deg y, deg y') lattice with coefficients in Q(t).
    std::set<std::pair<int, int>> support;
    for (const auto& [e, c] : f.poly().terms()) support.insert({e[1], e[2]});
    for (const auto& [i0, j0] : support) {
        bool ok = true;
        for (const auto& [i, j] : support) {
            if (i == i0 && j == j0) continue;
            if (!(i0 + j0 >= i + j && i0 + 2 * j0 > i + 2 * j)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

DiffPoly NormalizedAODE::as_diffpoly() const { return DiffPoly(g.renamed(aode_vars())); }

NormalizedAODE normalize(const DiffPoly& f) {
    MSIndexReport ms = ms_index(f);
    if (!ms.positive)
        throw PreconditionError("normalize: m.s.index must be positive");
    const int d = f.d();
    const long ell = ms.index;

    // Content over Q(t)[y]: a common factor of the a_i with positive
    // y-degree makes the input unusable.
    QPoly content(f.poly().vars());
    for (int i = 0; i <= d; ++i) {
        QPoly ai = f.coeff_a(i);
        if (ai.is_zero()) continue;
        content = content.is_zero() ? ai : multi_gcd(content, ai);
        if (content.is_constant()) break;
    }
    if (content.degree(1) > 0)
        throw PreconditionError("normalize: coefficients have a nontrivial common factor");
    if (!is_irreducible_over_qt(f.poly()))
        throw PreconditionError("normalize: input is reducible over Q(t)");

    // Smallest nonnegative integer c with a_0(t, c) != 0.
    QPoly a0 = f.coeff_a(0);
    Rational c(0);
    while (a0.partial_eval(1, c).is_zero()) c += Rational(1);

    const std::vector<std::string> zvars{"t", "z", "z'"};
    QPoly g(zvars);
    const QPoly z = QPoly::variable(zvars, 1);
    const QPoly cz1 = z.scaled(c) + QPoly::constant(zvars, Rational(1));
    for (int i = 0; i <= d; ++i) {
        QPoly ai = f.coeff_a(i);
        if (ai.is_zero()) continue;
        // b_i(z) = (-1)^i sum_j coef_{ij}(t) (cz+1)^j z^(ell+2d-2i-j)
        QPoly bi(zvars);
        for (int j = 0; j <= ai.degree(1); ++j) {
            QPoly cj = ai.coeff_of(1, j);  // polynomial in t
            if (cj.is_zero()) continue;
            const long zexp = ell + 2L * (d - i) - j;
            bi += cj.with_vars(zvars) * cz1.pow(j) * z.pow(static_cast<int>(zexp));
        }
        if (i % 2 == 1) bi = -bi;
        QPoly zp = QPoly::variable(zvars, 2).pow(i);
        g += bi * zp;
    }

    NormalizedAODE out{std::move(g), c, f};
    const long want = 2L * d + ell;
    if (out.g.total_degree({1, 2}) != want)
        throw std::logic_error("normalize: tdeg(g) != 2d + ms_index");
    if (out.g.coeff_of(2, 0).degree(1) != want)
        throw std::logic_error("normalize: deg(b_0, z) != 2d + ms_index");
    return out;
}

bool verify_solution(const DiffPoly& f, const RatFunc& r) {
    QtPoly over_qt = to_qt_coeffs(f.poly());
    return over_qt.eval({r, r.derivative()}).is_zero();
}

Height diffpoly_height(const DiffPoly& f) { return height_poly(to_qt_coeffs(f.poly())); }

BoundReport degree_bound(const DiffPoly& f, SMode smode) {
    MSIndexReport ms = ms_index(f);
    if (!ms.positive)
        throw PreconditionError(
            "degree_bound: m.s.index is not positive; the bound does not apply");
    BoundReport rep;
    rep.n = f.tdeg_all();
    rep.d = f.d();
    rep.ms_index = ms.index;
    const Height Tf = diffpoly_height(f);
    const long ntilde = 2L * rep.d + rep.ms_index;

    auto push = [&rep](const std::string& name, const std::string& formula, Rational v) {
        rep.ledger.push_back({name, formula, std::move(v)});
    };
    push("n", "tdeg(f)", Rational(rep.n));
    push("d", "deg(f, y')", Rational(rep.d));
    push("ms_index", "max_i deg(a_i, y) - 2(d - i)", Rational(rep.ms_index));
    push("T_f", "height of the coefficient vector over Q(t)", Tf.value());
    push("n_tilde", "2d + ms_index (degree of the normalized curve)", Rational(ntilde));

    const bool autonomous = Tf.value().is_zero();
    if (!autonomous && !is_irreducible_over_qt(f.poly()))
        throw PreconditionError("degree_bound: input is reducible over Q(t)");

    const long worst_s = (9L * rep.n * rep.n + 1) / 2;  // ceil(9 n^2 / 2)
    long s = worst_s;
    if (smode == SMode::CurveDerived && !autonomous) {
        NormalizedAODE norm = normalize(f);
        QtPoly g_curve = to_qt_coeffs(norm.g.renamed({"t", "x0", "x1"}));
        s = s_estimate(homogenize(g_curve));
    }
    rep.s = static_cast<int>(s);
    push("s", "number of quadratic transformations (bound)", Rational(s));

    rep.N = Rational(ntilde).pow(2);
    push("N", "n_tilde^2", rep.N);
    rep.mu = (Rational(2) * rep.N + Rational(ntilde)) * Rational(ntilde) * Rational(rep.d);
    push("mu", "(2N + n_tilde) * deg(g,z) * deg(g,z')", rep.mu);
    rep.C = eval_C(static_cast<int>(ntilde), rep.d, static_cast<int>(ntilde), rep.N,
                   rep.s, Tf);
    push("C", "2^(s^2/2+15s/2+10) (2Nn+n^2+2^(s-2))^4 n^(s+9) (n+1)^4 T(f) / N", rep.C);
    Rational chain = Rational(ntilde + 1) * rep.C;
    push("chain_bound", "(n_tilde + 1) * C", chain);
    rep.final_bound = eval_final_bound(rep.n, Tf);
    push("final_bound", "(54n^3+9n^2+2^(5n^2))^4 n^(5n^2+12) 2^(11n^4+43n^2+34) T(f)",
         rep.final_bound);
    return rep;
}

}  // namespace aode
