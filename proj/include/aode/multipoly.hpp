#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aode/ratfunc.hpp"
#include "aode/rational.hpp"

namespace aode {

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_long(long n) { return Rational(n); }
    static std::string str(const Rational& c) { return c.str(); }
};

template <>
struct FieldTraits<RatFunc> {
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rational(1)); }
    static RatFunc from_long(long n) { return RatFunc(Rational(n)); }
    static std::string str(const RatFunc& c) { return c.str(); }
};

using Exponents = std::vector<int>;

/// Graded-lexicographic order, leading term first: higher total degree wins,
/// ties broken lexicographically on the exponent vector.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial over a coefficient field K (Rational or
/// RatFunc), with a fixed ordered variable list and graded-lex canonical
/// term order. Zero terms are never stored.
template <class K>
class MultiPoly {
public:
    using TermMap = std::map<Exponents, K, GradedLexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const K& c) {
        MultiPoly p(std::move(vars));
        p.set_term(Exponents(p.vars_.size(), 0), c);
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, size_t idx) {
        MultiPoly p(std::move(vars));
        if (idx >= p.vars_.size()) throw std::invalid_argument("MultiPoly: bad variable index");
        Exponents e(p.vars_.size(), 0);
        e[idx] = 1;
        p.set_term(e, FieldTraits<K>::one());
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::invalid_argument("MultiPoly: unknown variable " + name);
    }
    bool has_var(const std::string& name) const {
        return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree() == 0); }
    size_t term_count() const { return terms_.size(); }

    /// -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }
    /// Total degree over a subset of variables (by index); -1 for zero poly.
    int total_degree(const std::vector<size_t>& idxs) const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (size_t i : idxs) s += e[i];
            d = std::max(d, s);
        }
        return d;
    }
    int degree(size_t var_idx) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var_idx]);
        return d;
    }
    int degree(const std::string& name) const { return degree(var_index(name)); }
    int min_exponent(size_t var_idx) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = (d < 0) ? e[var_idx] : std::min(d, e[var_idx]);
        return d;
    }

    K coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldTraits<K>::zero() : it->second;
    }
    K constant_term() const { return coeff(Exponents(vars_.size(), 0)); }
    const Exponents& leading_exponents() const {
        if (terms_.empty()) throw std::domain_error("MultiPoly: zero polynomial has no leading term");
        return terms_.begin()->first;
    }
    const K& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("MultiPoly: zero polynomial has no leading term");
        return terms_.begin()->second;
    }

    void set_term(const Exponents& e, const K& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        for (int x : e)
            if (x < 0) throw std::invalid_argument("MultiPoly: negative exponent");
        if (c.is_zero())
            terms_.erase(e);
        else
            terms_[e] = c;
    }
    void add_term(const Exponents& e, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            set_term(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r(a.vars_);
        Exponents e(a.vars_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const K& c) const {
        MultiPoly r(vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
        return r;
    }
    MultiPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
        MultiPoly r = constant(vars_, FieldTraits<K>::one());
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Coefficient of var^k as a polynomial over the same variable list
    /// (the variable's exponent is zeroed out).
    MultiPoly coeff_of(size_t var_idx, int k) const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_)
            if (e[var_idx] == k) {
                Exponents e2 = e;
                e2[var_idx] = 0;
                r.set_term(e2, c);
            }
        return r;
    }

    /// Divides by var^k; throws if some term has a smaller exponent.
    MultiPoly shift_down(size_t var_idx, int k) const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var_idx] < k) throw std::domain_error("MultiPoly: shift_down would go negative");
            Exponents e2 = e;
            e2[var_idx] -= k;
            r.terms_.emplace(std::move(e2), c);
        }
        return r;
    }

    MultiPoly derivative(size_t var_idx) const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_)
            if (e[var_idx] > 0) {
                Exponents e2 = e;
                e2[var_idx] -= 1;
                r.add_term(e2, c * FieldTraits<K>::from_long(e[var_idx]));
            }
        return r;
    }

    /// Substitute a field value for one variable (result keeps the var list).
    MultiPoly partial_eval(size_t var_idx, const K& value) const {
        MultiPoly r(vars_);
        const int dmax = degree(var_idx);
        std::vector<K> powers(std::max(dmax + 1, 1), FieldTraits<K>::one());
        for (int i = 1; i <= dmax; ++i) powers[i] = powers[i - 1] * value;
        for (const auto& [e, c] : terms_) {
            Exponents e2 = e;
            e2[var_idx] = 0;
            r.add_term(e2, c * powers[e[var_idx]]);
        }
        return r;
    }

    /// Full evaluation at one field point per variable.
    K eval(const std::vector<K>& point) const {
        if (point.size() != vars_.size()) throw std::invalid_argument("MultiPoly: eval arity mismatch");
        K acc = FieldTraits<K>::zero();
        for (const auto& [e, c] : terms_) {
            K term = c;
            for (size_t i = 0; i < point.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term *= point[i];
            acc += term;
        }
        return acc;
    }

    /// Composition: substitute values[i] (all over a common variable list)
    /// for variable i. Powers are cached per variable.
    MultiPoly compose(const std::vector<MultiPoly>& values) const {
        if (values.size() != vars_.size())
            throw std::invalid_argument("MultiPoly: compose arity mismatch");
        const std::vector<std::string>& tvars = values.empty() ? vars_ : values[0].vars_;
        MultiPoly r(tvars);
        std::vector<std::vector<MultiPoly>> powers(values.size());
        for (size_t i = 0; i < values.size(); ++i)
            powers[i].push_back(constant(tvars, FieldTraits<K>::one()));
        for (const auto& [e, c] : terms_) {
            MultiPoly term = constant(tvars, c);
            for (size_t i = 0; i < values.size(); ++i) {
                while (static_cast<int>(powers[i].size()) <= e[i])
                    powers[i].push_back(powers[i].back() * values[i]);
                if (e[i] > 0) term *= powers[i][e[i]];
            }
            r += term;
        }
        return r;
    }

    /// Substitute one variable by a polynomial over the same variable list.
    MultiPoly subst(size_t var_idx, const MultiPoly& value) const {
        std::vector<MultiPoly> values;
        values.reserve(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i)
            values.push_back(i == var_idx ? value : variable(vars_, i));
        return compose(values);
    }

    /// Exact division; nullopt when not divisible.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const {
        if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
        check_vars(d);
        MultiPoly q(vars_), r = *this;
        const Exponents& lde = d.leading_exponents();
        const K& ldc = d.leading_coeff();
        while (!r.is_zero()) {
            const Exponents& lre = r.leading_exponents();
            Exponents diff(lre.size());
            for (size_t i = 0; i < lre.size(); ++i) {
                diff[i] = lre[i] - lde[i];
                if (diff[i] < 0) return std::nullopt;
            }
            K c = r.leading_coeff() * ldc.inverse();
            MultiPoly t(vars_);
            t.set_term(diff, c);
            q += t;
            r -= t * d;
        }
        return q;
    }
    bool divides(const MultiPoly& f) const { return f.divide_exact(*this).has_value(); }

    /// Rebuild over a new variable list; every current variable must appear
    /// in the new list (extra variables get exponent zero).
    MultiPoly with_vars(const std::vector<std::string>& new_vars) const {
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
            if (it == new_vars.end()) {
                if (degree(i) > 0)
                    throw std::invalid_argument("MultiPoly: variable " + vars_[i] +
                                                " missing from target list");
                pos[i] = static_cast<size_t>(-1);
            } else {
                pos[i] = static_cast<size_t>(it - new_vars.begin());
            }
        }
        MultiPoly r(new_vars);
        for (const auto& [e, c] : terms_) {
            Exponents e2(new_vars.size(), 0);
            for (size_t i = 0; i < vars_.size(); ++i)
                if (pos[i] != static_cast<size_t>(-1)) e2[pos[i]] = e[i];
            r.set_term(e2, c);
        }
        return r;
    }

    /// Rename variables positionally.
    MultiPoly renamed(const std::vector<std::string>& new_names) const {
        if (new_names.size() != vars_.size())
            throw std::invalid_argument("MultiPoly: rename arity mismatch");
        MultiPoly r(new_names);
        r.terms_ = terms_;
        return r;
    }

    /// Monic with respect to the graded-lex leading coefficient.
    MultiPoly normalized() const {
        if (is_zero()) return *this;
        return scaled(leading_coeff().inverse());
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string cs = FieldTraits<K>::str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) {
                    os << "-";
                    cs = cs.substr(1);
                }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            const bool has_vars = std::accumulate(e.begin(), e.end(), 0) > 0;
            const bool needs_paren = cs.find_first_of("+-/ ") != std::string::npos;
            if (!has_vars) {
                os << (needs_paren && cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs);
                continue;
            }
            bool wrote_coeff = false;
            if (cs != "1") {
                os << (needs_paren ? "(" + cs + ")" : cs);
                wrote_coeff = true;
            }
            bool first_var = !wrote_coeff;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!first_var) os << "*";
                os << vars_[i];
                if (e[i] > 1) os << "^" << e[i];
                first_var = false;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

private:
    void check_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_)
            throw std::invalid_argument("MultiPoly: operand variable lists differ");
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

using QPoly = MultiPoly<Rational>;
using QtPoly = MultiPoly<RatFunc>;

/// Univariate view: coefficients of var^k, k = 0..deg (var exponent zeroed).
template <class K>
std::vector<MultiPoly<K>> univariate_view(const MultiPoly<K>& f, size_t var_idx) {
    const int d = f.degree(var_idx);
    std::vector<MultiPoly<K>> out;
    out.reserve(std::max(d + 1, 0));
    for (int k = 0; k <= d; ++k) out.push_back(f.coeff_of(var_idx, k));
    return out;
}

/// Rebuild from a univariate view.
template <class K>
MultiPoly<K> from_univariate_view(const std::vector<MultiPoly<K>>& coeffs, size_t var_idx,
                                  const std::vector<std::string>& vars) {
    MultiPoly<K> r(vars);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            Exponents e2 = e;
            e2[var_idx] += static_cast<int>(k);
            r.add_term(e2, c);
        }
    }
    return r;
}

/// Monic (graded-lex) greatest common divisor via primitive PRS recursion.
template <class K>
MultiPoly<K> multi_gcd(const MultiPoly<K>& a, const MultiPoly<K>& b);

/// Sylvester-determinant resultant with respect to `var`, computed by
/// fraction-free (Bareiss) elimination. Requirements follow the classical
/// convention: both inputs nonzero, var present in the shared variable list
/// and of positive degree in at least one input.
template <class K>
MultiPoly<K> resultant(const MultiPoly<K>& f, const MultiPoly<K>& g, const std::string& var);

/// Bareiss determinant of a square matrix of polynomials.
template <class K>
MultiPoly<K> det_bareiss(std::vector<std::vector<MultiPoly<K>>> m,
                         const std::vector<std::string>& vars);

// ---------------------------------------------------------------------------
// Implementation of gcd / resultant templates.

namespace detail {

// Pseudo-remainder of f by g in variable var_idx: lc(g)^(df-dg+1) * f mod g.
template <class K>
MultiPoly<K> pseudo_rem(const MultiPoly<K>& f, const MultiPoly<K>& g, size_t var_idx) {
    const int dg = g.degree(var_idx);
    MultiPoly<K> r = f;
    const MultiPoly<K> lcg = g.coeff_of(var_idx, dg);
    int df = r.degree(var_idx);
    int steps = df - dg + 1;
    while (!r.is_zero() && r.degree(var_idx) >= dg) {
        const int dr = r.degree(var_idx);
        MultiPoly<K> lcr = r.coeff_of(var_idx, dr);
        MultiPoly<K> xshift = MultiPoly<K>::variable(r.vars(), var_idx).pow(dr - dg);
        r = r * lcg - g * lcr * xshift;
        --steps;
    }
    // Keep the classical scaling so subresultant identities hold.
    for (; steps > 0; --steps) r = r * lcg;
    return r;
}

template <class K>
MultiPoly<K> content_in(const MultiPoly<K>& f, size_t var_idx) {
    MultiPoly<K> c(f.vars());
    for (int k = 0; k <= f.degree(var_idx); ++k) {
        MultiPoly<K> ck = f.coeff_of(var_idx, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : multi_gcd(c, ck);
        if (c.is_constant()) break;
    }
    return c.is_zero() ? MultiPoly<K>::constant(f.vars(), FieldTraits<K>::one()) : c;
}

}  // namespace detail

template <class K>
MultiPoly<K> multi_gcd(const MultiPoly<K>& a, const MultiPoly<K>& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    if (a.is_constant() || b.is_constant())
        return MultiPoly<K>::constant(a.vars(), FieldTraits<K>::one());
    // Main variable: the last with positive degree in either operand.
    size_t v = a.vars().size();
    for (size_t i = a.vars().size(); i-- > 0;) {
        if (a.degree(i) > 0 || b.degree(i) > 0) {
            v = i;
            break;
        }
    }
    if (a.degree(v) == 0) {
        // gcd divides a which is free of v, so gcd(a, content_v(b)).
        return multi_gcd(a, detail::content_in(b, v)).normalized();
    }
    if (b.degree(v) == 0) return multi_gcd(detail::content_in(a, v), b).normalized();

    MultiPoly<K> ca = detail::content_in(a, v);
    MultiPoly<K> cb = detail::content_in(b, v);
    MultiPoly<K> cont = multi_gcd(ca, cb);
    MultiPoly<K> f = *a.divide_exact(ca);
    MultiPoly<K> g = *b.divide_exact(cb);
    if (f.degree(v) < g.degree(v)) std::swap(f, g);
    while (true) {
        MultiPoly<K> r = detail::pseudo_rem(f, g, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            g = MultiPoly<K>::constant(a.vars(), FieldTraits<K>::one());
            break;
        }
        MultiPoly<K> cr = detail::content_in(r, v);
        f = std::move(g);
        g = *r.divide_exact(cr);
    }
    if (g.degree(v) > 0) {
        MultiPoly<K> cg = detail::content_in(g, v);
        g = *g.divide_exact(cg);
    }
    return (cont * g).normalized();
}

template <class K>
MultiPoly<K> det_bareiss(std::vector<std::vector<MultiPoly<K>>> m,
                         const std::vector<std::string>& vars) {
    const size_t n = m.size();
    if (n == 0) return MultiPoly<K>::constant(vars, FieldTraits<K>::one());
    int sign = 1;
    MultiPoly<K> prev = MultiPoly<K>::constant(vars, FieldTraits<K>::one());
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = n;
            for (size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) return MultiPoly<K>(vars);  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly<K> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = num.divide_exact(prev);
                if (!q) throw std::logic_error("det_bareiss: inexact division");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MultiPoly<K>(vars);
        }
        prev = m[k][k];
    }
    MultiPoly<K> d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

/// Embed a univariate polynomial as variable `idx` of a multivariate ring.
inline QPoly unipoly_to_multi(const UniPoly& p, std::vector<std::string> vars, size_t idx) {
    QPoly r(std::move(vars));
    for (const auto& [d, c] : p.terms()) {
        Exponents e(r.vars().size(), 0);
        e[idx] = d;
        r.set_term(e, c);
    }
    return r;
}

/// Project a multivariate polynomial using only variable `idx` down to a
/// UniPoly named after that variable. Throws when another variable occurs.
inline UniPoly multi_to_unipoly(const QPoly& p, size_t idx) {
    UniPoly r(p.vars()[idx]);
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != idx && e[i] != 0)
                throw std::invalid_argument("multi_to_unipoly: polynomial is not univariate");
        r.set_coeff(e[idx], c);
    }
    return r;
}

template <class K>
MultiPoly<K> resultant(const MultiPoly<K>& f, const MultiPoly<K>& g, const std::string& var) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant: zero operand");
    if (!f.has_var(var) && !g.has_var(var))
        throw std::invalid_argument("resultant: variable absent from both inputs");
    const size_t v = f.var_index(var);
    const int n = std::max(f.degree(v), 0);
    const int m = std::max(g.degree(v), 0);
    if (n == 0 && m == 0)
        throw std::invalid_argument("resultant: variable absent from both inputs");
    if (n == 0) return f.pow(m);
    if (m == 0) return g.pow(n);
    auto fc = univariate_view(f, v);
    auto gc = univariate_view(g, v);
    const size_t size = static_cast<size_t>(n + m);
    std::vector<std::vector<MultiPoly<K>>> s(size,
                                             std::vector<MultiPoly<K>>(size, MultiPoly<K>(f.vars())));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s[row][row + j] = fc[n - j];
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[m + row][row + j] = gc[m - j];
    return det_bareiss(std::move(s), f.vars());
}

}  // namespace aode
