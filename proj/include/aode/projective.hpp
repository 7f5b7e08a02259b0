#pragma once

#include <array>

#include "aode/errors.hpp"
#include "aode/multipoly.hpp"

namespace aode {

template <class K>
using Mat3K = std::array<std::array<K, 3>, 3>;

template <class K>
K mat3_det(const Mat3K<K>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline const std::vector<std::string>& proj_vars() {
    static const std::vector<std::string> v{"x0", "x1", "x2"};
    return v;
}

/// Point of P^2 over K, stored in canonical form: the last nonzero
/// coordinate equals 1.
template <class K>
class ProjPoint {
public:
    ProjPoint(K a, K b, K c) : c_{std::move(a), std::move(b), std::move(c)} { canonicalize(); }

    const std::array<K, 3>& coords() const { return c_; }
    const K& operator[](size_t i) const { return c_[i]; }

    friend bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.c_ == q.c_; }
    friend bool operator!=(const ProjPoint& p, const ProjPoint& q) { return !(p == q); }
    /// Canonical total order (used for deterministic tie-breaking).
    friend bool operator<(const ProjPoint& p, const ProjPoint& q) {
        for (size_t i = 0; i < 3; ++i) {
            if (p.c_[i] != q.c_[i]) return p.c_[i] < q.c_[i];
        }
        return false;
    }

    bool is_fundamental() const {
        int nonzero = 0;
        for (const auto& x : c_)
            if (!x.is_zero()) ++nonzero;
        return nonzero == 1;
    }

    std::string str() const {
        return "(" + FieldTraits<K>::str(c_[0]) + " : " + FieldTraits<K>::str(c_[1]) + " : " +
               FieldTraits<K>::str(c_[2]) + ")";
    }

private:
    void canonicalize() {
        size_t last = 3;
        for (size_t i = 3; i-- > 0;) {
            if (!c_[i].is_zero()) {
                last = i;
                break;
            }
        }
        if (last == 3) throw PreconditionError("ProjPoint: all coordinates zero");
        K inv = c_[last].inverse();
        for (auto& x : c_) x = x * inv;
    }

    std::array<K, 3> c_;
};

/// Homogeneous nonzero polynomial in (x0, x1, x2) over K.
template <class K>
class ProjPoly {
public:
    explicit ProjPoly(MultiPoly<K> p) : p_(std::move(p)) {
        if (p_.vars() != proj_vars())
            p_ = p_.with_vars(proj_vars());
        if (p_.is_zero()) throw PreconditionError("ProjPoly: zero polynomial");
        const int n = p_.total_degree();
        for (const auto& [e, c] : p_.terms())
            if (e[0] + e[1] + e[2] != n)
                throw PreconditionError("ProjPoly: polynomial is not homogeneous");
    }

    const MultiPoly<K>& poly() const { return p_; }
    int degree() const { return p_.total_degree(); }

    K eval(const ProjPoint<K>& p) const {
        return p_.eval({p[0], p[1], p[2]});
    }
    bool contains(const ProjPoint<K>& p) const { return eval(p).is_zero(); }

    friend bool operator==(const ProjPoly& a, const ProjPoly& b) {
        return a.p_.normalized() == b.p_.normalized();
    }

    std::string str() const { return p_.str(); }

private:
    MultiPoly<K> p_;
};

/// Homogenization of a polynomial in (x0, x1) by x2, preserving total degree.
template <class K>
ProjPoly<K> homogenize(const MultiPoly<K>& f) {
    if (f.is_zero()) throw PreconditionError("homogenize: zero polynomial");
    const size_t i0 = f.var_index("x0");
    const size_t i1 = f.has_var("x1") ? f.var_index("x1") : i0;
    const int n = f.total_degree();
    MultiPoly<K> r(proj_vars());
    for (const auto& [e, c] : f.terms()) {
        const int a = e[i0];
        const int b = (i1 == i0) ? 0 : e[i1];
        r.set_term({a, b, n - a - b}, c);
    }
    return ProjPoly<K>(std::move(r));
}

/// Sets coordinate `index` to 1. The result is expressed in (x0, x1) for
/// index 2, and keeps the natural remaining pair otherwise.
template <class K>
MultiPoly<K> dehomogenize(const ProjPoly<K>& F, int index) {
    if (index < 0 || index > 2) throw std::invalid_argument("dehomogenize: bad index");
    std::vector<std::string> keep;
    for (int i = 0; i < 3; ++i)
        if (i != index) keep.push_back(proj_vars()[i]);
    MultiPoly<K> r(keep);
    for (const auto& [e, c] : F.poly().terms()) {
        Exponents e2;
        for (int i = 0; i < 3; ++i)
            if (i != index) e2.push_back(e[i]);
        r.add_term(e2, c);
    }
    return r;
}

}  // namespace aode
