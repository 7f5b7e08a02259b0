#include "aode/heights.hpp"

namespace aode {

Height height_ratfunc(const RatFunc& a) { return Height(Rational(a.degree())); }

Height height_point(const std::vector<RatFunc>& coords) {
    bool all_zero = true;
    for (const auto& c : coords)
        if (!c.is_zero()) all_zero = false;
    if (coords.empty() || all_zero)
        throw PreconditionError("height_point: all-zero tuple");
    UniPoly den_lcm = UniPoly::constant(Rational(1), coords.front().var());
    for (const auto& c : coords) den_lcm = poly_lcm(den_lcm, c.den());
    std::vector<UniPoly> cleared;
    cleared.reserve(coords.size());
    for (const auto& c : coords) cleared.push_back(c.num() * den_lcm.exact_div(c.den()));
    UniPoly g(coords.front().var());
    for (const auto& w : cleared) {
        if (w.is_zero()) continue;
        g = g.is_zero() ? w : poly_gcd(g, w);
        if (g.is_constant()) break;
    }
    int maxdeg = 0;
    for (const auto& w : cleared) {
        if (w.is_zero()) continue;
        maxdeg = std::max(maxdeg, w.degree() - g.degree());
    }
    return Height(Rational(maxdeg));
}

Height height_algebraic(const AlgebraicElement& a) {
    const QPoly& g = a.min_poly;
    const size_t xi = g.var_index("x");
    const size_t ti = g.var_index("t");
    if (g.degree(xi) < 1)
        throw PreconditionError("height_algebraic: min_poly must have positive degree in x");
    if (!is_irreducible_bipoly(g))
        throw PreconditionError("height_algebraic: min_poly is reducible");
    return Height(Rational(std::max(g.degree(ti), 0), g.degree(xi)));
}

Height height_poly(const QtPoly& f) {
    if (f.is_zero()) throw PreconditionError("height_poly: zero polynomial");
    if (f.term_count() == 1) return Height(Rational(0));
    std::vector<RatFunc> coeffs;
    coeffs.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) coeffs.push_back(c);
    return height_point(coeffs);
}

RatFunc det3(const Matrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Height height_matrix(const Matrix3& m) {
    if (det3(m).is_zero()) throw PreconditionError("height_matrix: singular matrix");
    std::vector<RatFunc> entries;
    entries.reserve(9);
    for (const auto& row : m)
        for (const auto& e : row) entries.push_back(e);
    return height_point(entries);
}

}  // namespace aode
