#include "aode/bounds.hpp"

#include "aode/curves.hpp"
#include "aode/factor.hpp"

namespace aode {

Rational PowerOfTwoHalf::exact() const {
    if (!is_exact_rational())
        throw std::domain_error("PowerOfTwoHalf: exponent is half-integral");
    return pow2(k_ / 2);
}

Rational PowerOfTwoHalf::ceiled() const {
    long e = k_ >= 0 ? (k_ + 1) / 2 : k_ / 2;  // ceil(k/2)
    return pow2(e);
}

Rational pow2_half_ceiled(long h) { return PowerOfTwoHalf(h).ceiled(); }

Rational eval_Ni(int i, int n, const Height& TF0, const Height& TD) {
    if (i < 0) throw PreconditionError("eval_Ni: negative index");
    if (n < 1) throw PreconditionError("eval_Ni: n must be positive");
    Rational r = pow2(static_cast<long>(i) * (i - 1) / 2);
    r *= Rational(n).pow(i);
    Rational m = Rational(8) * Rational(n) * TF0.value();
    if (TD.value() > m) m = TD.value();
    return r * m;
}

Rational eval_rr2_degree(int s, int n, const Rational& mu) {
    if (s < 0 || n < 1 || mu.sign() < 0)
        throw PreconditionError("eval_rr2_degree: invalid arguments");
    return pow2(2L * s + 1) * Rational(n + 1) * (mu + pow2(s - 2) * Rational(n));
}

Rational eval_rr2_height(int s, int n, const Rational& mu, const Height& TF, const Height& TD) {
    if (s < 0 || n < 1 || mu.sign() < 0)
        throw PreconditionError("eval_rr2_height: invalid arguments");
    // Exponent s^2/2 + 15s/2 + 5 handled as a half-exponent of 2, rounded up
    // (a no-op whenever s(s+15) is even, which holds for every integer s).
    Rational r = pow2_half_ceiled(static_cast<long>(s) * s + 15L * s + 10);
    r *= Rational(n).pow(s + 5);
    r *= Rational(n + 1).pow(3);
    r *= (mu + pow2(s - 2) * Rational(n)).pow(3);
    Rational m = Rational(8) * Rational(n) * TF.value();
    if (TD.value() > m) m = TD.value();
    return r * m;
}

Rational eval_C(int n0, int n1, int n, const Rational& N, int s, const Height& Tf) {
    (void)n0;
    (void)n1;
    if (N.sign() <= 0) throw PreconditionError("eval_C: N must be at least 1");
    if (n < 1 || s < 0) throw PreconditionError("eval_C: invalid arguments");
    Rational r = pow2_half_ceiled(static_cast<long>(s) * s + 15L * s + 20);
    r *= (Rational(2) * N * Rational(n) + Rational(n).pow(2) + pow2(s - 2)).pow(4);
    r *= Rational(n).pow(s + 9);
    r *= Rational(n + 1).pow(4);
    r *= Tf.value();
    return r / N;
}

Rational eval_final_bound(int n, const Height& Tf) {
    if (n < 1) throw PreconditionError("eval_final_bound: n must be positive");
    const long n2 = static_cast<long>(n) * n;
    const long n3 = n2 * n;
    const long n4 = n2 * n2;
    Rational head = Rational(54) * Rational(n3) + Rational(9) * Rational(n2) + pow2(5 * n2);
    Rational r = head.pow(4);
    r *= Rational(n).pow(5 * n2 + 12);
    r *= pow2(11 * n4 + 43 * n2 + 34);
    return r * Tf.value();
}

namespace {

// Accepts a curve over (x0, x1), tolerating a vacuous x2 in the variable list.
QtPoly as_affine_curve(const QtPoly& f) {
    if (f.has_var("x2") && f.degree(f.var_index("x2")) > 0)
        throw PreconditionError("expected an affine curve in x0, x1 (x2 present)");
    return f.with_vars({"x0", "x1"});
}

}  // namespace

HeightInequalityReport check_height_inequality(const QtPoly& f_in, const RatFunc& c0,
                                               const RatFunc& c1, const Rational& N) {
    HeightInequalityReport rep;
    if (N.sign() <= 0) throw PreconditionError("check_height_inequality: N must be >= 1");
    QtPoly f = as_affine_curve(f_in);
    const size_t i0 = f.var_index("x0");
    const size_t i1 = f.var_index("x1");
    if (!f.eval({c0, c1}).is_zero())
        throw PreconditionError("check_height_inequality: point is not on the curve");
    rep.n0 = std::max(f.degree(i0), 0);
    rep.n1 = std::max(f.degree(i1), 0);
    rep.n = f.total_degree();
    rep.N = N;
    rep.s = s_estimate(homogenize(f));
    const Height Tf = f.term_count() == 1 ? Height() : height_poly(f);
    rep.C = eval_C(rep.n0, rep.n1, rep.n, N, rep.s, Tf);
    rep.T0 = height_ratfunc(c0).value();
    rep.T1 = height_ratfunc(c1).value();
    const Rational nn(rep.n);
    rep.lower_lhs =
        (Rational(1) - nn / (N + nn)) * Rational(rep.n0) * rep.T0 - rep.C;
    rep.middle = Rational(rep.n1) * rep.T1;
    rep.upper_rhs = ((N + nn) / N) * Rational(rep.n0) * rep.T0 + rep.C;
    rep.lower_ok = rep.lower_lhs <= rep.middle;
    rep.upper_ok = rep.middle <= rep.upper_rhs;
    return rep;
}

ParametrizationReport eval_parametrization_relation(const QtPoly& f_in, const RatFunc& a,
                                                    const RatFunc& b) {
    ParametrizationReport rep;
    QtPoly f = as_affine_curve(f_in);
    if (a.is_constant() || b.is_constant())
        throw PreconditionError("eval_parametrization_relation: constant coordinate");
    if (!f.eval({a, b}).is_zero())
        throw PreconditionError("eval_parametrization_relation: point is not on the curve");
    rep.n0 = std::max(f.degree(f.var_index("x0")), 0);
    rep.n1 = std::max(f.degree(f.var_index("x1")), 0);
    rep.deg_a = Rational(a.degree());
    rep.deg_b = Rational(b.degree());
    if (rep.n1 == 0 || rep.n0 == 0)
        throw PreconditionError("eval_parametrization_relation: curve degenerate in one variable");
    rep.m = rep.deg_a / Rational(rep.n1);
    rep.degree_a_ok = rep.m * Rational(rep.n1) == rep.deg_a;
    rep.degree_b_ok = rep.deg_b == rep.m * Rational(rep.n0);
    rep.cross_ok = rep.deg_a * Rational(rep.n0) == rep.deg_b * Rational(rep.n1);
    return rep;
}

}  // namespace aode
