#pragma once

#include "aode/unipoly.hpp"

namespace aode {

/// Element of Q(t): reduced fraction num/den with den monic and nonzero.
class RatFunc {
public:
    RatFunc() : num_(UniPoly("t")), den_(UniPoly::constant(Rational(1), "t")) {}
    RatFunc(const Rational& c, std::string var = "t")
        : num_(UniPoly::constant(c, var)), den_(UniPoly::constant(Rational(1), var)) {}
    explicit RatFunc(const UniPoly& num)
        : num_(num), den_(UniPoly::constant(Rational(1), num.var())) {}
    RatFunc(UniPoly num, UniPoly den);

    static RatFunc variable(std::string var = "t") { return RatFunc(UniPoly::variable(std::move(var))); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    const std::string& var() const { return num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value as a Rational; requires is_constant().
    Rational constant_value() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    /// Total order for canonical sorting (degree-lexicographic on the string form).
    friend bool operator<(const RatFunc& a, const RatFunc& b);

    RatFunc inverse() const;
    RatFunc pow(int e) const;

    /// Quotient-rule derivative with respect to the variable, reduced.
    RatFunc derivative() const;

    /// Evaluation at a rational point; nullopt when the denominator vanishes.
    std::optional<Rational> eval(const Rational& x) const;

    /// max(deg num, deg den); 0 for constants (including 0).
    int degree() const {
        if (is_zero()) return 0;
        return std::max(num_.degree(), den_.degree());
    }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& r);

private:
    void reduce();
    UniPoly num_, den_;
};

}  // namespace aode
