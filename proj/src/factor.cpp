#include "aode/factor.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace aode {

namespace {

constexpr size_t kDivisorCap = 4096;
constexpr size_t kTupleBudget = 500000;
constexpr size_t kSubsetBudget = 4096;

std::vector<mpz_class> integer_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    if (a == 0) throw std::domain_error("integer_divisors: zero");
    std::vector<mpz_class> divs;
    for (mpz_class i(1); i * i <= a; ++i) {
        if (a % i == 0) {
            divs.push_back(i);
            mpz_class j = a / i;
            if (j != i) divs.push_back(j);
            if (divs.size() > kDivisorCap)
                throw UnsupportedRangeError("factorization: integer divisor budget exceeded");
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Lagrange interpolation through (xs[i], ys[i]).
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                    const std::string& var) {
    UniPoly acc(var);
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly term = UniPoly::constant(ys[i], var);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            UniPoly lin = UniPoly::variable(var) - UniPoly::constant(xs[j], var);
            term = term * lin * (xs[i] - xs[j]).inverse();
        }
        acc += term;
    }
    return acc;
}

// Monic squarefree with no rational roots, degree >= 4: find one nontrivial
// monic factor via the divisor trial method, or conclude irreducibility.
std::optional<UniPoly> kronecker_split(const UniPoly& h) {
    const UniPoly H = h.integer_primitive();
    const int n = H.degree();
    const std::string& var = h.var();
    for (int d = 2; d <= n / 2; ++d) {
        std::vector<Rational> xs;
        std::vector<mpz_class> vals;
        for (long a = 0; static_cast<int>(xs.size()) < d + 1; a = (a > 0 ? -a : -a + 1)) {
            Rational v = H.eval(Rational(a));
            xs.push_back(Rational(a));
            vals.push_back(v.numerator());  // integral since H in Z[x], a in Z
        }
        std::vector<std::vector<Rational>> choices(d + 1);
        size_t tuples = 1;
        for (int i = 0; i <= d; ++i) {
            auto divs = integer_divisors(vals[i]);
            for (const auto& dv : divs) {
                choices[i].push_back(Rational(dv));
                if (i > 0) choices[i].push_back(Rational(mpz_class(-dv)));
            }
            tuples *= choices[i].size();
            if (tuples > kTupleBudget)
                throw UnsupportedRangeError("factorization: trial-divisor budget exceeded");
        }
        std::vector<size_t> idx(d + 1, 0);
        std::vector<Rational> ys(d + 1);
        while (true) {
            for (int i = 0; i <= d; ++i) ys[i] = choices[i][idx[i]];
            UniPoly cand = interpolate(xs, ys, var);
            if (cand.degree() == d && cand.divides(H)) return cand.monic();
            int k = d;
            for (; k >= 0; --k) {
                if (++idx[k] < choices[k].size()) break;
                idx[k] = 0;
            }
            if (k < 0) break;
        }
    }
    return std::nullopt;
}

// Factors a monic squarefree polynomial with no rational roots.
void factor_squarefree_norational(const UniPoly& h, std::vector<UniPoly>& out) {
    if (h.degree() <= 0) return;
    if (h.degree() <= 3) {  // no rational roots => irreducible for deg 2, 3
        out.push_back(h);
        return;
    }
    auto split = kronecker_split(h);
    if (!split) {
        out.push_back(h);
        return;
    }
    factor_squarefree_norational(*split, out);
    factor_squarefree_norational(h.exact_div(*split).monic(), out);
}

void sort_unifactors(std::vector<UniFactor>& fs) {
    std::sort(fs.begin(), fs.end(), [](const UniFactor& a, const UniFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.str() < b.poly.str();
    });
}

}  // namespace

std::vector<UniFactor> factor_unipoly(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor_unipoly: zero polynomial");
    std::vector<UniFactor> out;
    if (f.is_constant()) return out;
    for (const auto& part : squarefree_decomposition(f)) {
        UniPoly rest = part.poly;
        for (const auto& [root, mult] : rational_roots(part.poly)) {
            UniPoly lin = UniPoly::variable(f.var()) - UniPoly::constant(root, f.var());
            out.push_back({lin, part.multiplicity});
            rest = rest.exact_div(lin);
        }
        std::vector<UniPoly> irr;
        factor_squarefree_norational(rest.monic(), irr);
        for (const auto& p : irr) out.push_back({p, part.multiplicity});
    }
    sort_unifactors(out);
    return out;
}

bool is_irreducible_unipoly(const UniPoly& f) {
    if (f.is_zero() || f.is_constant()) return false;
    auto fs = factor_unipoly(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

namespace {

std::vector<size_t> effective_vars(const QPoly& f) {
    std::vector<size_t> v;
    for (size_t i = 0; i < f.vars().size(); ++i)
        if (f.degree(i) > 0) v.push_back(i);
    return v;
}

// Unfold a Kronecker image: exponent e becomes u^(e mod D) v^(e div D).
QPoly kronecker_unfold(const UniPoly& t, int D, const std::vector<std::string>& vars, size_t u_idx,
                       size_t v_idx) {
    QPoly r(vars);
    for (const auto& [e, c] : t.terms()) {
        Exponents ex(vars.size(), 0);
        ex[u_idx] = e % D;
        ex[v_idx] = e / D;
        r.set_term(ex, c);
    }
    return r;
}

// Factors a primitive (no content in Q[u]) squarefree polynomial with
// positive degree in both u and v.
void factor_bivariate_squarefree(const QPoly& w, size_t u_idx, size_t v_idx,
                                 std::vector<QPoly>& out) {
    const int D = w.degree(u_idx) + 1;
    QPoly image = w.subst(v_idx, QPoly::variable(w.vars(), u_idx).pow(D));
    UniPoly G = multi_to_unipoly(image, u_idx);
    auto factors = factor_unipoly(G);
    size_t combos = 1;
    for (const auto& fac : factors) {
        combos *= static_cast<size_t>(fac.multiplicity) + 1;
        if (combos > kSubsetBudget)
            throw UnsupportedRangeError("factorization: Kronecker subset budget exceeded");
    }
    const int degG = G.degree();
    std::vector<int> exp(factors.size(), 0);
    while (true) {
        // advance odometer
        size_t k = 0;
        for (; k < factors.size(); ++k) {
            if (++exp[k] <= factors[k].multiplicity) break;
            exp[k] = 0;
        }
        if (k == factors.size()) break;
        int deg = 0;
        for (size_t i = 0; i < factors.size(); ++i) deg += exp[i] * factors[i].poly.degree();
        if (deg == 0 || deg >= degG || deg > degG / 2) continue;
        UniPoly prod = UniPoly::constant(Rational(1), G.var());
        for (size_t i = 0; i < factors.size(); ++i)
            if (exp[i] > 0) prod *= factors[i].poly.pow(exp[i]);
        QPoly cand = kronecker_unfold(prod, D, w.vars(), u_idx, v_idx);
        auto quot = w.divide_exact(cand);
        if (quot) {
            factor_bivariate_squarefree(cand.normalized(), u_idx, v_idx, out);
            factor_bivariate_squarefree(quot->normalized(), u_idx, v_idx, out);
            return;
        }
    }
    out.push_back(w.normalized());
}

void append_unipoly_factors(const QPoly& f, size_t var_idx, std::vector<BiFactor>& out) {
    for (const auto& fac : factor_unipoly(multi_to_unipoly(f, var_idx)))
        out.push_back({unipoly_to_multi(fac.poly, f.vars(), var_idx), fac.multiplicity});
}

void sort_bifactors(std::vector<BiFactor>& fs) {
    std::sort(fs.begin(), fs.end(), [](const BiFactor& a, const BiFactor& b) {
        if (a.poly.total_degree() != b.poly.total_degree())
            return a.poly.total_degree() < b.poly.total_degree();
        return a.poly.str() < b.poly.str();
    });
}

}  // namespace

std::vector<BiFactor> factor_bipoly(const QPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor_bipoly: zero polynomial");
    std::vector<BiFactor> out;
    auto eff = effective_vars(f);
    if (eff.empty()) return out;
    if (eff.size() == 1) {
        append_unipoly_factors(f, eff[0], out);
        sort_bifactors(out);
        return out;
    }
    if (eff.size() != 2)
        throw UnsupportedRangeError("factor_bipoly: more than two effective variables");
    const size_t u = eff[0], v = eff[1];

    // Content in the u-direction (gcd of the Q[u] coefficients of powers of v).
    QPoly content(f.vars());
    for (int k = 0; k <= f.degree(v); ++k) {
        QPoly ck = f.coeff_of(v, k);
        if (ck.is_zero()) continue;
        content = content.is_zero() ? ck : multi_gcd(content, ck);
        if (content.is_constant()) break;
    }
    QPoly p = f;
    if (!content.is_constant()) {
        append_unipoly_factors(content, u, out);
        p = *p.divide_exact(content);
    }
    if (p.degree(v) == 0) {
        if (p.degree(u) > 0) append_unipoly_factors(p, u, out);
        sort_bifactors(out);
        return out;
    }

    QPoly g = multi_gcd(p, p.derivative(v));
    QPoly w = *p.divide_exact(g);  // squarefree part
    std::vector<QPoly> irr;
    factor_bivariate_squarefree(w.normalized(), u, v, irr);
    for (const auto& q : irr) {
        int mult = 0;
        QPoly rest = p;
        while (true) {
            auto quot = rest.divide_exact(q);
            if (!quot) break;
            rest = *quot;
            ++mult;
        }
        out.push_back({q, mult});
    }
    sort_bifactors(out);
    return out;
}

bool is_irreducible_bipoly(const QPoly& f) {
    if (f.is_zero() || f.total_degree() < 1) return false;
    auto fs = factor_bipoly(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

std::optional<QPoly> sqrt_poly(const QPoly& f) {
    if (f.is_zero()) return QPoly(f.vars());
    if (f.is_constant()) {
        auto r = f.constant_term().sqrt_exact();
        if (!r) return std::nullopt;
        return QPoly::constant(f.vars(), *r);
    }
    auto eff = effective_vars(f);
    const size_t v = eff.back();
    const int d2 = f.degree(v);
    if (d2 % 2 != 0) return std::nullopt;
    const int m = d2 / 2;
    auto lead = sqrt_poly(f.coeff_of(v, d2));
    if (!lead) return std::nullopt;
    std::vector<QPoly> rc(m + 1, QPoly(f.vars()));
    rc[m] = *lead;
    const QPoly two_lead = rc[m].scaled(Rational(2));
    for (int j = m - 1; j >= 0; --j) {
        QPoly c = f.coeff_of(v, m + j);
        for (int i = j + 1; i <= m; ++i) {
            const int k = m + j - i;
            if (k <= j || k > m) continue;  // only products of already-known coeffs above j
            c -= rc[i] * rc[k];
        }
        auto q = c.divide_exact(two_lead);
        if (!q) return std::nullopt;
        rc[j] = *q;
    }
    QPoly r = from_univariate_view(rc, v, f.vars());
    if (r * r != f) return std::nullopt;
    return r;
}

std::vector<QPoly> monic_divisors(const QPoly& f, size_t budget) {
    if (f.is_zero()) throw std::domain_error("monic_divisors: zero polynomial");
    auto fs = factor_bipoly(f);
    size_t total = 1;
    for (const auto& fac : fs) {
        total *= static_cast<size_t>(fac.multiplicity) + 1;
        if (total > budget)
            throw UnsupportedRangeError("monic_divisors: divisor budget exceeded");
    }
    std::vector<QPoly> out;
    std::vector<int> exp(fs.size(), 0);
    while (true) {
        QPoly d = QPoly::constant(f.vars(), Rational(1));
        for (size_t i = 0; i < fs.size(); ++i)
            if (exp[i] > 0) d *= fs[i].poly.pow(exp[i]);
        out.push_back(d.normalized());
        size_t k = 0;
        for (; k < fs.size(); ++k) {
            if (++exp[k] <= fs[k].multiplicity) break;
            exp[k] = 0;
        }
        if (k == fs.size()) break;
    }
    return out;
}

namespace {

std::vector<UniPoly> unipoly_divisors(const UniPoly& f, size_t budget) {
    std::vector<UniPoly> out;
    auto fs = factor_unipoly(f);
    size_t total = 1;
    for (const auto& fac : fs) {
        total *= static_cast<size_t>(fac.multiplicity) + 1;
        if (total > budget)
            throw UnsupportedRangeError("poly_roots_in_qt: divisor budget exceeded");
    }
    std::vector<int> exp(fs.size(), 0);
    while (true) {
        UniPoly d = UniPoly::constant(Rational(1), f.var());
        for (size_t i = 0; i < fs.size(); ++i)
            if (exp[i] > 0) d *= fs[i].poly.pow(exp[i]);
        out.push_back(d.monic());
        size_t k = 0;
        for (; k < fs.size(); ++k) {
            if (++exp[k] <= fs[k].multiplicity) break;
            exp[k] = 0;
        }
        if (k == fs.size()) break;
    }
    return out;
}

}  // namespace

std::vector<RatFunc> poly_roots_in_qt(const std::vector<UniPoly>& coeffs_in) {
    std::vector<UniPoly> A = coeffs_in;
    while (!A.empty() && A.back().is_zero()) A.pop_back();
    if (A.empty()) throw std::domain_error("poly_roots_in_qt: zero polynomial");
    std::vector<RatFunc> roots;
    size_t low = 0;
    while (low < A.size() && A[low].is_zero()) ++low;
    if (low > 0) {
        if (low >= A.size()) throw std::domain_error("poly_roots_in_qt: zero polynomial");
        roots.push_back(RatFunc());
        A.erase(A.begin(), A.begin() + static_cast<long>(low));
    }
    const size_t d = A.size() - 1;
    if (d == 0) return roots;

    auto us = unipoly_divisors(A.front(), 512);
    auto vs = unipoly_divisors(A.back(), 512);
    std::set<std::string> seen;
    for (const auto& u : us) {
        for (const auto& v : vs) {
            if (poly_gcd(u, v).degree() > 0) continue;
            // Candidate root c*u/v with one unknown rational scalar c:
            // collect, per power of t, a univariate condition in c.
            std::map<int, UniPoly> gamma;
            for (size_t i = 0; i < A.size(); ++i) {
                if (A[i].is_zero()) continue;
                UniPoly term = A[i] * u.pow(static_cast<int>(i)) *
                               v.pow(static_cast<int>(d - i));
                for (const auto& [k, c] : term.terms()) {
                    auto it = gamma.try_emplace(k, UniPoly("c")).first;
                    it->second += UniPoly::monomial(c, static_cast<int>(i), "c");
                }
            }
            UniPoly g("c");
            for (const auto& [k, poly] : gamma) {
                g = g.is_zero() ? poly : poly_gcd(g, poly);
                if (!g.is_zero() && g.is_constant()) break;
            }
            if (g.is_zero() || g.is_constant()) continue;
            for (const auto& [c0, mult] : rational_roots(g)) {
                if (c0.is_zero()) continue;
                RatFunc cand(u * c0, v);
                RatFunc acc;
                for (size_t i = A.size(); i-- > 0;) acc = acc * cand + RatFunc(A[i]);
                if (!acc.is_zero()) continue;
                if (seen.insert(cand.str()).second) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// Q[t]-content of f across all (y, y') monomials, as a polynomial in t only.
QPoly t_content(const QPoly& f, size_t y_idx, size_t z_idx) {
    QPoly cont(f.vars());
    for (int i = 0; i <= std::max(f.degree(y_idx), 0); ++i) {
        for (int j = 0; j <= std::max(f.degree(z_idx), 0); ++j) {
            QPoly c = f.coeff_of(y_idx, i).coeff_of(z_idx, j);
            if (c.is_zero()) continue;
            cont = cont.is_zero() ? c : multi_gcd(cont, c);
            if (cont.is_constant()) return cont;
        }
    }
    return cont;
}

}  // namespace

bool is_irreducible_over_qt(const QPoly& f_in) {
    const size_t t_idx = f_in.var_index("t");
    const size_t y_idx = f_in.var_index("y");
    const size_t z_idx = f_in.var_index("y'");
    if (f_in.is_zero() || f_in.total_degree({y_idx, z_idx}) < 1)
        throw PreconditionError("is_irreducible: total degree in (y, y') must be positive");

    QPoly f = f_in;
    QPoly cont = t_content(f, y_idx, z_idx);
    if (!cont.is_constant()) f = *f.divide_exact(cont);

    const int dy = f.degree(y_idx), dz = f.degree(z_idx);
    if (dy == 0 || dz == 0) {
        // Univariate over Q(t): count factors with positive main-variable degree.
        const size_t w = dy == 0 ? z_idx : y_idx;
        int positive = 0;
        for (const auto& fac : factor_bipoly(f))
            if (fac.poly.degree(w) > 0) positive += fac.multiplicity;
        return positive == 1;
    }

    const size_t w = (dy <= dz) ? y_idx : z_idx;
    const int d = f.degree(w);
    std::vector<QPoly> A = univariate_view(f, w);

    QPoly c(f.vars());
    for (const auto& ai : A) {
        if (ai.is_zero()) continue;
        c = c.is_zero() ? ai : multi_gcd(c, ai);
        if (c.is_constant()) break;
    }
    if (!c.is_constant()) {
        const size_t o = (w == y_idx) ? z_idx : y_idx;
        if (c.degree(o) > 0) return false;  // a factor free of w but not of the other variable
        f = *f.divide_exact(c);             // unit in Q(t)
        A = univariate_view(f, w);
    }

    if (d == 1) return true;
    if (A[0].is_zero()) return false;  // w divides f

    if (d == 2) {
        QPoly disc = A[1] * A[1] - (A[2] * A[0]).scaled(Rational(4));
        return !sqrt_poly(disc).has_value();
    }
    if (d == 3) {
        auto us = monic_divisors(A[0], 512);
        auto vs = monic_divisors(A[3], 512);
        for (const auto& u : us) {
            for (const auto& v : vs) {
                if (!multi_gcd(u, v).is_constant()) continue;
                std::map<Exponents, UniPoly, GradedLexGreater> gamma;
                for (int i = 0; i <= 3; ++i) {
                    if (A[i].is_zero()) continue;
                    QPoly term = A[i] * u.pow(i) * v.pow(3 - i);
                    for (const auto& [e, coef] : term.terms()) {
                        auto it = gamma.try_emplace(e, UniPoly("c")).first;
                        it->second += UniPoly::monomial(coef, i, "c");
                    }
                }
                UniPoly g("c");
                for (const auto& [e, poly] : gamma) {
                    g = g.is_zero() ? poly : poly_gcd(g, poly);
                    if (!g.is_zero() && g.is_constant()) break;
                }
                if (g.is_zero() || g.is_constant()) continue;
                for (const auto& [c0, mult] : rational_roots(g)) {
                    if (c0.is_zero()) continue;
                    QPoly lin = v * QPoly::variable(f.vars(), w) - u.scaled(c0);
                    if (lin.divides(f)) return false;
                }
            }
        }
        return true;
    }
    throw UnsupportedRangeError("is_irreducible: degree beyond supported factorization range");
}

bool is_irreducible_bivariate(const QtPoly& f) {
    if (f.is_zero()) throw PreconditionError("is_irreducible: zero polynomial");
    return is_irreducible_over_qt(clear_denominators(f));
}

QPoly clear_denominators(const QtPoly& f) {
    std::vector<std::string> vars;
    vars.push_back("t");
    for (const auto& v : f.vars()) vars.push_back(v);
    UniPoly den_lcm = UniPoly::constant(Rational(1), "t");
    for (const auto& [e, c] : f.terms()) den_lcm = poly_lcm(den_lcm, c.den());
    QPoly out(vars);
    for (const auto& [e, c] : f.terms()) {
        UniPoly num = c.num() * den_lcm.exact_div(c.den());
        for (const auto& [k, cc] : num.terms()) {
            Exponents e2(vars.size(), 0);
            e2[0] = k;
            for (size_t i = 0; i < e.size(); ++i) e2[i + 1] = e[i];
            out.add_term(e2, cc);
        }
    }
    // Strip the Q[t]-content so the result is primitive over Q[t].
    QPoly cont(vars);
    std::map<Exponents, UniPoly> groups;
    for (const auto& [e, c] : out.terms()) {
        Exponents key(e.begin() + 1, e.end());
        auto it = groups.try_emplace(key, UniPoly("t")).first;
        it->second.set_coeff(e[0], c);
    }
    UniPoly g("t");
    for (const auto& [key, poly] : groups) {
        g = g.is_zero() ? poly : poly_gcd(g, poly);
        if (!g.is_zero() && g.is_constant()) break;
    }
    if (!g.is_zero() && g.degree() > 0) {
        QPoly gm = unipoly_to_multi(g, vars, 0);
        out = *out.divide_exact(gm);
    }
    return out;
}

QtPoly to_qt_coeffs(const QPoly& f, const std::string& t_name) {
    const size_t t_idx = f.var_index(t_name);
    std::vector<std::string> vars;
    for (size_t i = 0; i < f.vars().size(); ++i)
        if (i != t_idx) vars.push_back(f.vars()[i]);
    QtPoly out(vars);
    std::map<Exponents, UniPoly> groups;
    for (const auto& [e, c] : f.terms()) {
        Exponents key;
        key.reserve(e.size() - 1);
        for (size_t i = 0; i < e.size(); ++i)
            if (i != t_idx) key.push_back(e[i]);
        auto it = groups.try_emplace(key, UniPoly(t_name)).first;
        it->second.set_coeff(e[t_idx], c);
    }
    for (const auto& [key, poly] : groups) out.set_term(key, RatFunc(poly));
    return out;
}

}  // namespace aode
