#include "aode/solver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "aode/factor.hpp"

namespace aode {

namespace {

size_t count_effective(const QPoly& p, std::vector<size_t>* which = nullptr) {
    size_t n = 0;
    for (size_t i = 0; i < p.vars().size(); ++i)
        if (p.degree(i) > 0) {
            ++n;
            if (which) which->push_back(i);
        }
    return n;
}

struct Resolver {
    size_t var;
    QPoly expr;  // references only variables unresolved at creation time
};

struct SearchState {
    std::vector<QPoly> eqs;
    std::vector<Resolver> resolvers;
    std::vector<bool> resolved;
    int budget;
};

void substitute_everywhere(std::vector<QPoly>& eqs, size_t var, const QPoly& expr) {
    for (auto& e : eqs) {
        if (e.degree(var) > 0) e = e.subst(var, expr);
    }
}

void prune(std::vector<QPoly>& eqs, bool& dead) {
    std::vector<QPoly> out;
    for (auto& e : eqs) {
        if (e.is_zero()) continue;
        if (e.is_constant()) {
            dead = true;
            return;
        }
        out.push_back(std::move(e));
    }
    eqs = std::move(out);
}

void collect_leaf(const SearchState& st, SolveOutcome& out) {
    const size_t nv = st.resolved.size();
    std::vector<size_t> free_vars;
    for (size_t i = 0; i < nv; ++i)
        if (!st.resolved[i]) free_vars.push_back(i);

    if (st.resolvers.empty()) {
        if (free_vars.empty()) {
            out.points.emplace_back();
            return;
        }
        // Entire space is free (no constraints at all).
        AffineSpace sp;
        sp.base.assign(nv, Rational(0));
        for (size_t fv : free_vars) {
            std::vector<Rational> dir(nv, Rational(0));
            dir[fv] = Rational(1);
            sp.dirs.push_back(std::move(dir));
        }
        out.spaces.push_back(std::move(sp));
        return;
    }
    const auto& vars = st.resolvers.front().expr.vars();

    // Back-substitute resolvers (newest first) to express every variable as
    // a polynomial in the free variables.
    std::vector<QPoly> value;
    value.reserve(nv);
    for (size_t i = 0; i < nv; ++i) value.push_back(QPoly::variable(vars, i));
    for (auto it = st.resolvers.rbegin(); it != st.resolvers.rend(); ++it)
        value[it->var] = it->expr.compose(value);

    if (free_vars.empty()) {
        std::vector<Rational> pt(nv);
        for (size_t i = 0; i < nv; ++i) pt[i] = value[i].constant_term();
        out.points.push_back(std::move(pt));
        return;
    }
    // Family: require an affine closure.
    AffineSpace sp;
    sp.base.assign(nv, Rational(0));
    sp.dirs.assign(free_vars.size(), std::vector<Rational>(nv, Rational(0)));
    for (size_t i = 0; i < nv; ++i) {
        if (value[i].total_degree() > 1) {
            out.complete = false;  // non-affine positive-dimensional component
            return;
        }
        sp.base[i] = value[i].constant_term();
        for (size_t k = 0; k < free_vars.size(); ++k) {
            Exponents e(nv, 0);
            e[free_vars[k]] = 1;
            sp.dirs[k][i] = value[i].coeff(e);
        }
    }
    out.spaces.push_back(std::move(sp));
}

void search(SearchState st, SolveOutcome& out);

void branch_on_value(const SearchState& st, size_t var, const Rational& val, SolveOutcome& out) {
    SearchState next = st;
    QPoly c = QPoly::constant(st.eqs.front().vars(), val);
    substitute_everywhere(next.eqs, var, c);
    next.resolvers.push_back({var, c});
    next.resolved[var] = true;
    search(std::move(next), out);
}

void search(SearchState st, SolveOutcome& out) {
    while (true) {
        bool dead = false;
        prune(st.eqs, dead);
        if (dead) return;
        if (st.eqs.empty()) {
            collect_leaf(st, out);
            return;
        }
        const auto& vars = st.eqs.front().vars();

        // 1. Linear equation: eliminate one variable exactly.
        bool progressed = false;
        for (size_t i = 0; i < st.eqs.size(); ++i) {
            const QPoly& e = st.eqs[i];
            if (e.total_degree() != 1) continue;
            size_t var = vars.size();
            for (size_t v = 0; v < vars.size(); ++v) {
                Exponents ex(vars.size(), 0);
                ex[v] = 1;
                if (!e.coeff(ex).is_zero()) {
                    var = v;
                    break;
                }
            }
            Exponents ex(vars.size(), 0);
            ex[var] = 1;
            const Rational c = e.coeff(ex);
            QPoly rest = e;
            rest.set_term(ex, Rational(0));
            QPoly expr = rest.scaled(-c.inverse());
            st.eqs.erase(st.eqs.begin() + static_cast<long>(i));
            substitute_everywhere(st.eqs, var, expr);
            st.resolvers.push_back({var, std::move(expr)});
            st.resolved[var] = true;
            progressed = true;
            break;
        }
        if (progressed) continue;

        // 2. Univariate equation: branch on its rational roots.
        size_t best = st.eqs.size();
        int best_deg = 0;
        for (size_t i = 0; i < st.eqs.size(); ++i) {
            std::vector<size_t> which;
            if (count_effective(st.eqs[i], &which) == 1) {
                const int deg = st.eqs[i].degree(which[0]);
                if (best == st.eqs.size() || deg < best_deg) {
                    best = i;
                    best_deg = deg;
                }
            }
        }
        if (best != st.eqs.size()) {
            std::vector<size_t> which;
            count_effective(st.eqs[best], &which);
            const size_t var = which[0];
            UniPoly u = multi_to_unipoly(st.eqs[best], var);
            for (const auto& [root, mult] : rational_roots(u))
                branch_on_value(st, var, root, out);
            return;
        }

        // 3. Equation linear in some variable with a constant coefficient.
        for (size_t i = 0; i < st.eqs.size() && !progressed; ++i) {
            const QPoly& e = st.eqs[i];
            for (size_t v = 0; v < vars.size() && !progressed; ++v) {
                if (e.degree(v) != 1) continue;
                QPoly c1 = e.coeff_of(v, 1);
                if (!c1.is_constant()) continue;
                QPoly rest = e.coeff_of(v, 0);
                QPoly expr = rest.scaled(-c1.constant_term().inverse());
                st.eqs.erase(st.eqs.begin() + static_cast<long>(i));
                substitute_everywhere(st.eqs, v, expr);
                st.resolvers.push_back({v, std::move(expr)});
                st.resolved[v] = true;
                progressed = true;
            }
        }
        if (progressed) continue;

        // 4. Resultant elimination on the variable of smallest degree.
        if (st.budget <= 0) {
            out.complete = false;
            return;
        }
        size_t pivot_eq = st.eqs.size(), pivot_var = vars.size();
        int pivot_deg = 0;
        for (size_t i = 0; i < st.eqs.size(); ++i) {
            for (size_t v = 0; v < vars.size(); ++v) {
                const int dv = st.eqs[i].degree(v);
                if (dv <= 0) continue;
                if (pivot_eq == st.eqs.size() || dv < pivot_deg ||
                    (dv == pivot_deg && st.eqs[i].term_count() <
                                            st.eqs[pivot_eq].term_count())) {
                    pivot_eq = i;
                    pivot_var = v;
                    pivot_deg = dv;
                }
            }
        }
        if (pivot_eq == st.eqs.size()) {
            out.complete = false;  // no effective variable but non-constant? defensive
            return;
        }
        QPoly g = st.eqs[pivot_eq];
        std::vector<QPoly> reduced;
        bool degenerate = false;
        for (size_t i = 0; i < st.eqs.size(); ++i) {
            if (i == pivot_eq) continue;
            const QPoly& h = st.eqs[i];
            if (h.degree(pivot_var) <= 0) {
                reduced.push_back(h);
                continue;
            }
            QPoly r = resultant(g, h, vars[pivot_var]);
            if (r.is_zero()) {
                degenerate = true;
                break;
            }
            reduced.push_back(std::move(r));
        }
        if (degenerate) {
            out.complete = false;
            return;
        }
        // The sub-search runs with fresh resolvers; coordinates of variables
        // resolved at this level are filled in afterwards so their defining
        // expressions see the correct pivot value.
        SearchState sub;
        sub.eqs = std::move(reduced);
        sub.resolved = st.resolved;
        sub.resolved[pivot_var] = true;  // re-solved per sub-solution below
        sub.budget = st.budget - 1;
        SolveOutcome partial;
        search(std::move(sub), partial);
        if (!partial.complete) out.complete = false;
        if (!partial.spaces.empty()) out.complete = false;  // cannot extend families
        for (const auto& pt : partial.points) {
            QPoly gi = g;
            for (size_t v = 0; v < vars.size(); ++v) {
                if (v == pivot_var) continue;
                if (gi.degree(v) > 0) gi = gi.partial_eval(v, pt[v]);
            }
            if (gi.is_zero()) {
                out.complete = false;  // infinite fiber
                continue;
            }
            if (gi.degree(pivot_var) <= 0) continue;
            UniPoly u = multi_to_unipoly(gi, pivot_var);
            for (const auto& [root, mult] : rational_roots(u)) {
                std::vector<Rational> full = pt;
                full[pivot_var] = root;
                bool ok = true;
                for (const auto& e : st.eqs) {
                    if (!e.eval(full).is_zero()) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                for (auto it = st.resolvers.rbegin(); it != st.resolvers.rend(); ++it)
                    full[it->var] = it->expr.eval(full);
                out.points.push_back(std::move(full));
            }
        }
        return;
    }
}

}  // namespace

SolveOutcome solve_poly_system(std::vector<QPoly> eqs, int budget) {
    SolveOutcome out;
    if (eqs.empty()) return out;
    SearchState st;
    st.resolved.assign(eqs.front().vars().size(), false);
    st.eqs = std::move(eqs);
    st.budget = budget;
    search(std::move(st), out);
    // De-duplicate points.
    std::sort(out.points.begin(), out.points.end(),
              [](const auto& a, const auto& b) {
                  for (size_t i = 0; i < a.size(); ++i) {
                      if (a[i] != b[i]) return a[i] < b[i];
                  }
                  return false;
              });
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

namespace {

// Ansatz ring: variables (t, p_0..p_dp, q_0..q_{dq-1}).
struct AnsatzRing {
    std::vector<std::string> vars;
    int dp, dq;
    size_t p_index(int i) const { return 1 + static_cast<size_t>(i); }
    size_t q_index(int j) const { return 1 + static_cast<size_t>(dp) + 1 + static_cast<size_t>(j); }
};

AnsatzRing make_ring(int dp, int dq) {
    AnsatzRing r;
    r.dp = dp;
    r.dq = dq;
    r.vars.push_back("t");
    for (int i = 0; i <= dp; ++i) r.vars.push_back("p" + std::to_string(i));
    for (int j = 0; j < dq; ++j) r.vars.push_back("q" + std::to_string(j));
    return r;
}

// p(t) and monic q(t) with the given coefficient polynomials (which may be
// the ansatz variables themselves or affine parameter expressions).
QPoly build_p(const AnsatzRing& r, const std::vector<QPoly>& pc) {
    QPoly p(r.vars);
    const QPoly t = QPoly::variable(r.vars, 0);
    for (int i = 0; i <= r.dp; ++i) p += pc[static_cast<size_t>(i)] * t.pow(i);
    return p;
}

QPoly build_q(const AnsatzRing& r, const std::vector<QPoly>& qc) {
    const QPoly t = QPoly::variable(r.vars, 0);
    QPoly q = t.pow(r.dq);
    for (int j = 0; j < r.dq; ++j) q += qc[static_cast<size_t>(j)] * t.pow(j);
    return q;
}

// Substitute y = p/q, y' = (p'q - pq')/q^2 into f and clear q powers.
QPoly cleared_equation(const DiffPoly& f, const AnsatzRing& r, const QPoly& p, const QPoly& q) {
    const QPoly t = QPoly::variable(r.vars, 0);
    const QPoly w = p.derivative(0) * q - p * q.derivative(0);
    int D = 0;
    for (const auto& [e, c] : f.poly().terms()) D = std::max(D, e[1] + 2 * e[2]);
    std::vector<QPoly> ppow{QPoly::constant(r.vars, Rational(1))};
    std::vector<QPoly> wpow{QPoly::constant(r.vars, Rational(1))};
    std::vector<QPoly> qpow{QPoly::constant(r.vars, Rational(1))};
    auto at = [](std::vector<QPoly>& v, const QPoly& base, int k) -> const QPoly& {
        while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * base);
        return v[static_cast<size_t>(k)];
    };
    QPoly G(r.vars);
    for (const auto& [e, c] : f.poly().terms()) {
        QPoly term = QPoly::constant(r.vars, c) * t.pow(e[0]);
        term *= at(ppow, p, e[1]);
        term *= at(wpow, w, e[2]);
        term *= at(qpow, q, D - e[1] - 2 * e[2]);
        G += term;
    }
    return G;
}

// Equations: the t-coefficients of G, over the unknowns only.
std::vector<QPoly> coefficient_system(const AnsatzRing& r, const QPoly& G) {
    std::vector<std::string> unknowns(r.vars.begin() + 1, r.vars.end());
    std::vector<QPoly> eqs;
    for (int k = 0; k <= std::max(G.degree(0), 0); ++k) {
        QPoly ck = G.coeff_of(0, k);
        if (ck.is_zero()) continue;
        eqs.push_back(ck.with_vars(unknowns));
    }
    return eqs;
}

RatFunc point_to_ratfunc(const AnsatzRing& r, const std::vector<Rational>& pt) {
    std::vector<Rational> pc, qc;
    for (int i = 0; i <= r.dp; ++i) pc.push_back(pt[r.p_index(i) - 1]);
    UniPoly num = UniPoly::from_coeffs(pc, "t");
    UniPoly den = UniPoly::monomial(Rational(1), r.dq, "t");
    for (int j = 0; j < r.dq; ++j)
        den += UniPoly::monomial(pt[r.q_index(j) - 1], j, "t");
    return RatFunc(num, den);
}

struct CellFamily {
    AnsatzRing ring;
    AffineSpace space;
};

UniPoly coeff_slice(const AnsatzRing& r, const std::vector<Rational>& vec, bool numerator) {
    UniPoly out("t");
    if (numerator) {
        for (int i = 0; i <= r.dp; ++i) out.set_coeff(i, vec[r.p_index(i) - 1]);
    } else {
        for (int j = 0; j < r.dq; ++j) out.set_coeff(j, vec[r.q_index(j) - 1]);
    }
    return out;
}

RatFunc family_member(const CellFamily& fam, const std::vector<Rational>& lambda) {
    std::vector<Rational> vec = fam.space.base;
    for (size_t k = 0; k < lambda.size(); ++k)
        for (size_t i = 0; i < vec.size(); ++i) vec[i] += lambda[k] * fam.space.dirs[k][i];
    UniPoly num = coeff_slice(fam.ring, vec, true);
    UniPoly den =
        coeff_slice(fam.ring, vec, false) + UniPoly::monomial(Rational(1), fam.ring.dq, "t");
    return RatFunc(num, den);
}

// Checks whether every member of the family reduces to the same function.
std::optional<RatFunc> family_collapses(const CellFamily& fam) {
    const size_t dims = fam.space.dirs.size();
    RatFunc base = family_member(fam, std::vector<Rational>(dims, Rational(0)));
    for (size_t k = 0; k < dims; ++k) {
        for (long v : {1L, 2L, -3L}) {
            std::vector<Rational> lambda(dims, Rational(0));
            lambda[k] = Rational(v);
            if (family_member(fam, lambda) != base) return std::nullopt;
        }
    }
    return base;
}

// Symbolic verification: substitute the parameterized (p, q) into f's cleared
// equation with the parameters as fresh variables; must vanish identically.
bool family_verifies(const DiffPoly& f, const CellFamily& fam) {
    const size_t dims = fam.space.dirs.size();
    AnsatzRing ext = fam.ring;
    for (size_t k = 0; k < dims; ++k) ext.vars.push_back("a" + std::to_string(k + 1));
    const size_t nplain = fam.ring.vars.size();
    std::vector<QPoly> pc, qc;
    auto affine_coeff = [&](size_t vec_idx) {
        QPoly v = QPoly::constant(ext.vars, fam.space.base[vec_idx]);
        for (size_t k = 0; k < dims; ++k)
            v += QPoly::variable(ext.vars, nplain + k).scaled(fam.space.dirs[k][vec_idx]);
        return v;
    };
    for (int i = 0; i <= ext.dp; ++i) pc.push_back(affine_coeff(ext.p_index(i) - 1));
    for (int j = 0; j < ext.dq; ++j) qc.push_back(affine_coeff(ext.q_index(j) - 1));
    QPoly p = build_p(ext, pc);
    QPoly q = build_q(ext, qc);
    return cleared_equation(f, ext, p, q).is_zero();
}

// Membership of a concrete solution in a family: solvable affine system.
bool family_contains(const CellFamily& fam, const RatFunc& r) {
    const size_t dims = fam.space.dirs.size();
    // p(lambda) * r.den - r.num * q(lambda) == 0, affine in lambda.
    UniPoly nb = coeff_slice(fam.ring, fam.space.base, true);
    UniPoly db = coeff_slice(fam.ring, fam.space.base, false) +
                 UniPoly::monomial(Rational(1), fam.ring.dq, "t");
    UniPoly constant_part = nb * r.den() - r.num() * db;
    std::vector<UniPoly> dir_part;
    for (size_t k = 0; k < dims; ++k) {
        UniPoly nk = coeff_slice(fam.ring, fam.space.dirs[k], true);
        UniPoly dk = coeff_slice(fam.ring, fam.space.dirs[k], false);
        dir_part.push_back(nk * r.den() - r.num() * dk);
    }
    int maxdeg = constant_part.degree();
    for (const auto& d : dir_part) maxdeg = std::max(maxdeg, d.degree());
    if (maxdeg < 0) return true;
    // Rows: one per t-degree; solve A lambda = -constant.
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (int deg = 0; deg <= maxdeg; ++deg) {
        std::vector<Rational> row;
        for (const auto& d : dir_part) row.push_back(d.coeff(deg));
        A.push_back(std::move(row));
        b.push_back(-constant_part.coeff(deg));
    }
    // Gaussian elimination, consistency only.
    const size_t rows = A.size(), cols = dims;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rows;
        for (size_t i = rank; i < rows; ++i)
            if (!A[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(A[piv], A[rank]);
        std::swap(b[piv], b[rank]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || A[i][c].is_zero()) continue;
            Rational m = A[i][c] / A[rank][c];
            for (size_t j = 0; j < cols; ++j) A[i][j] -= m * A[rank][j];
            b[i] -= m * b[rank];
        }
        ++rank;
    }
    for (size_t i = rank; i < rows; ++i) {
        bool all_zero = true;
        for (size_t j = 0; j < cols; ++j)
            if (!A[i][j].is_zero()) all_zero = false;
        if (all_zero && !b[i].is_zero()) return false;
    }
    return true;
}

}  // namespace

std::string SolutionFamily::str() const {
    std::ostringstream os;
    auto affine_str = [&](const UniPoly& base, const std::vector<UniPoly>& dirs) {
        std::ostringstream s;
        bool wrote = false;
        if (!base.is_zero()) {
            s << base.str();
            wrote = true;
        }
        for (size_t k = 0; k < dirs.size(); ++k) {
            if (dirs[k].is_zero()) continue;
            if (wrote) s << " + ";
            s << "a" << (k + 1) << "*(" << dirs[k].str() << ")";
            wrote = true;
        }
        if (!wrote) s << "0";
        return s.str();
    };
    os << "(" << affine_str(num_base, num_dirs) << ")";
    const bool den_trivial =
        den_base.degree() == 0 && den_base.coeff(0).is_one() &&
        std::all_of(den_dirs.begin(), den_dirs.end(), [](const UniPoly& d) { return d.is_zero(); });
    if (!den_trivial) os << "/(" << affine_str(den_base, den_dirs) << ")";
    return os.str();
}

SolutionSet find_rational_solutions(const DiffPoly& f, int cap) {
    if (cap < 0) throw PreconditionError("find_rational_solutions: cap must be nonnegative");
    SolutionSet out;
    out.search_cap = cap;
    out.complete_up_to_cap = true;
    try {
        out.theoretical_bound = degree_bound(f).final_bound;
    } catch (const std::exception&) {
        out.theoretical_bound = std::nullopt;
    }

    std::vector<RatFunc> sols;
    std::vector<CellFamily> families;

    std::vector<std::pair<int, int>> cells;
    for (int dp = 0; dp <= cap; ++dp)
        for (int dq = 0; dq <= cap; ++dq) cells.emplace_back(dp, dq);
    std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        const int ma = std::max(a.first, a.second), mb = std::max(b.first, b.second);
        if (ma != mb) return ma < mb;
        return a < b;
    });

    for (const auto& [dp, dq] : cells) {
        AnsatzRing ring = make_ring(dp, dq);
        std::vector<QPoly> pc, qc;
        for (int i = 0; i <= dp; ++i) pc.push_back(QPoly::variable(ring.vars, ring.p_index(i)));
        for (int j = 0; j < dq; ++j) qc.push_back(QPoly::variable(ring.vars, ring.q_index(j)));
        QPoly G = cleared_equation(f, ring, build_p(ring, pc), build_q(ring, qc));
        auto eqs = coefficient_system(ring, G);
        if (eqs.empty()) {
            // Identically solved: the whole cell is a family.
            AffineSpace sp;
            const size_t nv = ring.vars.size() - 1;
            sp.base.assign(nv, Rational(0));
            for (size_t k = 0; k < nv; ++k) {
                std::vector<Rational> dir(nv, Rational(0));
                dir[k] = Rational(1);
                sp.dirs.push_back(std::move(dir));
            }
            families.push_back({ring, std::move(sp)});
            continue;
        }
        SolveOutcome res = solve_poly_system(std::move(eqs));
        if (!res.complete) out.complete_up_to_cap = false;
        for (const auto& pt : res.points) {
            RatFunc r = point_to_ratfunc(ring, pt);
            if (verify_solution(f, r)) sols.push_back(r);
        }
        for (auto& sp : res.spaces) {
            CellFamily fam{ring, std::move(sp)};
            if (auto collapsed = family_collapses(fam)) {
                if (verify_solution(f, *collapsed)) sols.push_back(*collapsed);
                continue;
            }
            if (family_verifies(f, fam)) {
                families.push_back(std::move(fam));
            } else {
                out.complete_up_to_cap = false;  // should not happen; stay honest
            }
        }
    }

    // Drop points covered by a family, de-duplicate, sort canonically.
    std::vector<RatFunc> kept;
    for (const auto& r : sols) {
        bool covered = false;
        for (const auto& fam : families)
            if (family_contains(fam, r)) {
                covered = true;
                break;
            }
        if (!covered) kept.push_back(r);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    out.solutions = std::move(kept);

    std::set<std::string> family_strs;
    for (const auto& fam : families) {
        SolutionFamily sf;
        sf.num_base = coeff_slice(fam.ring, fam.space.base, true);
        sf.den_base = coeff_slice(fam.ring, fam.space.base, false) +
                      UniPoly::monomial(Rational(1), fam.ring.dq, "t");
        for (const auto& dir : fam.space.dirs) {
            sf.num_dirs.push_back(coeff_slice(fam.ring, dir, true));
            sf.den_dirs.push_back(coeff_slice(fam.ring, dir, false));
        }
        if (family_strs.insert(sf.str()).second) out.families.push_back(std::move(sf));
    }
    return out;
}

}  // namespace aode
