#pragma once

#include <string>
#include <vector>

#include "aode/heights.hpp"
#include "aode/multipoly.hpp"

namespace aode {

/// Exact representation of 2^(k/2) for integer k (possibly negative), used
/// to check that ceiled-exponent evaluation dominates the exact value.
class PowerOfTwoHalf {
public:
    explicit PowerOfTwoHalf(long half_exponent) : k_(half_exponent) {}
    long half_exponent() const { return k_; }
    bool is_exact_rational() const { return k_ % 2 == 0; }
    /// The exact value when the exponent is integral.
    Rational exact() const;
    /// 2^ceil(k/2): the smallest integral power of two >= the value.
    Rational ceiled() const;
    Rational squared() const { return pow2(k_); }

private:
    long k_;
};

/// 2^ceil(h/2) where h is the doubled exponent; exact when h is even.
Rational pow2_half_ceiled(long h);

struct LedgerEntry {
    std::string name;     // stable machine key
    std::string formula;  // human-readable formula text
    Rational value;
};

/// Full evaluation ledger for the rational-solution degree bound.
struct BoundReport {
    int n = 0;         // total degree of f (including t)
    int d = 0;         // degree in y'
    long ms_index = 0; // movable-singularity index
    int s = 0;         // number of quadratic transformations used in the chain
    Rational N;        // divisor parameter of the height-inequality step
    Rational mu;       // deg(D+ + D-) in that step
    Rational C;        // height-inequality constant
    Rational final_bound;
    std::vector<LedgerEntry> ledger;
};

/// N_i = 2^(i(i-1)/2) n^i max(8 n TF0, TD).
Rational eval_Ni(int i, int n, const Height& TF0, const Height& TD);

/// Degree bound for Riemann-Roch representatives: 2^(2s+1) (n+1) (mu + 2^(s-2) n).
Rational eval_rr2_degree(int s, int n, const Rational& mu);

/// Height bound for Riemann-Roch representatives:
/// 2^(s^2/2 + 15s/2 + 5) n^(s+5) (n+1)^3 (mu + 2^(s-2) n)^3 max(8 n TF, TD).
Rational eval_rr2_height(int s, int n, const Rational& mu, const Height& TF, const Height& TD);

/// Height-inequality constant:
/// C = 2^(s^2/2 + 15s/2 + 10) (2Nn + n^2 + 2^(s-2))^4 n^(s+9) (n+1)^4 T(f) / N.
Rational eval_C(int n0, int n1, int n, const Rational& N, int s, const Height& Tf);

/// Final closed-form degree bound:
/// (54n^3 + 9n^2 + 2^(5n^2))^4 n^(5n^2+12) 2^(11n^4+43n^2+34) T(f).
Rational eval_final_bound(int n, const Height& Tf);

struct HeightInequalityReport {
    int n0 = 0, n1 = 0, n = 0;
    Rational N;
    int s = 0;
    Rational C;
    Rational T0, T1;        // heights of the two coordinates
    Rational lower_lhs;     // (1 - n/(N+n)) n0 T(c0) - C
    Rational middle;        // n1 T(c1)
    Rational upper_rhs;     // ((N+n)/N) n0 T(c0) + C
    bool lower_ok = false;
    bool upper_ok = false;
    bool pass() const { return lower_ok && upper_ok; }
};

/// Two-sided height inequality for a point (c0, c1) on the curve f(x0,x1)=0
/// over Q(t), with C from eval_C and s from the curve's s_estimate.
HeightInequalityReport check_height_inequality(const QtPoly& f, const RatFunc& c0,
                                               const RatFunc& c1, const Rational& N);

struct ParametrizationReport {
    int n0 = 0, n1 = 0;
    Rational m;
    Rational deg_a, deg_b;
    bool degree_a_ok = false;
    bool degree_b_ok = false;
    bool cross_ok = false;
    bool pass() const { return degree_a_ok && degree_b_ok && cross_ok; }
};

/// Degree relations of a rational parametrization (a, b) of f(x0, x1) = 0:
/// deg a = m deg(f, x1), deg b = m deg(f, x0), T(a) deg(f,x0) = T(b) deg(f,x1).
ParametrizationReport eval_parametrization_relation(const QtPoly& f, const RatFunc& a,
                                                    const RatFunc& b);

}  // namespace aode
