#include "aode/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace aode {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Rational(1), den_.var());
        return;
    }
    UniPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    const Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        const Rational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("RatFunc: not a constant");
    if (is_zero()) return Rational(0);
    return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const RatFunc& a, const RatFunc& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.str() < b.str();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(Rational(1), var());
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::optional<Rational> RatFunc::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(x) / d;
}

std::string RatFunc::str() const {
    if (den_.is_constant()) return num_.str();
    std::string n = num_.str();
    if (num_.terms().size() > 1 || num_.leading_coeff().sign() < 0) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

}  // namespace aode
