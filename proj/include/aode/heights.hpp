#pragma once

#include <array>
#include <vector>

#include "aode/factor.hpp"
#include "aode/multipoly.hpp"

namespace aode {

/// Height value: a nonnegative rational (an integer whenever all inputs lie
/// in Q(t); a proper fraction only for algebraic elements).
class Height {
public:
    Height() : v_(0) {}
    explicit Height(Rational v) : v_(std::move(v)) {
        if (v_.sign() < 0) throw std::domain_error("Height: negative value");
    }
    explicit Height(long v) : Height(Rational(v)) {}
    const Rational& value() const { return v_; }
    friend bool operator==(const Height& a, const Height& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Height& a, const Height& b) { return a.v_ != b.v_; }
    friend bool operator<(const Height& a, const Height& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Height& a, const Height& b) { return a.v_ <= b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Height& h) {
        return os << h.v_.str();
    }

private:
    Rational v_;
};

/// Algebraic element over Q(t) given by an irreducible minimal polynomial
/// g(t, x) with positive degree in x.
struct AlgebraicElement {
    QPoly min_poly;  // variables ("t", "x")
};

/// T(a) = max(deg num, deg den) after reduction; 0 for constants.
Height height_ratfunc(const RatFunc& a);

/// T of a projective tuple of Q(t) coordinates: clear denominators, divide
/// by the polynomial gcd, take the max degree. Errors on the all-zero tuple.
Height height_point(const std::vector<RatFunc>& coords);

/// T(a) = deg(g, t) / deg(g, x) for the (checked) irreducible minimal
/// polynomial of a. Errors when min_poly is reducible.
Height height_algebraic(const AlgebraicElement& a);

/// T of a polynomial over Q(t): height_point of its coefficient vector;
/// 0 for a single term. Errors on the zero polynomial.
Height height_poly(const QtPoly& f);

/// T of an invertible 3x3 matrix over Q(t): height_point of the 9 entries.
/// Errors on a singular matrix.
using Matrix3 = std::array<std::array<RatFunc, 3>, 3>;
Height height_matrix(const Matrix3& m);

RatFunc det3(const Matrix3& m);

}  // namespace aode
