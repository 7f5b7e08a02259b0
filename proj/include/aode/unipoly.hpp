#pragma once

#include <map>
#include <string>
#include <vector>

#include "aode/rational.hpp"

namespace aode {

/// Sparse univariate polynomial over Rational. Zero coefficients are never
/// stored; the zero polynomial has an empty term map and degree() == -1
/// (standing in for the usual "-infinity" convention).
class UniPoly {
public:
    UniPoly() : var_("t") {}
    explicit UniPoly(std::string var) : var_(std::move(var)) {}

    static UniPoly constant(const Rational& c, std::string var = "t");
    static UniPoly variable(std::string var = "t");            // the monomial x
    static UniPoly monomial(const Rational& c, int deg, std::string var = "t");
    /// coeffs[i] is the coefficient of x^i.
    static UniPoly from_coeffs(const std::vector<Rational>& coeffs, std::string var = "t");

    const std::string& var() const { return var_; }
    const std::map<int, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return degree() <= 0; }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    Rational coeff(int deg) const;
    Rational leading_coeff() const;   // 0 for the zero polynomial
    Rational trailing_coeff() const;  // coefficient of lowest-degree term
    int trailing_degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }

    void set_coeff(int deg, const Rational& c);

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly operator*(const Rational& c) const;
    UniPoly pow(int e) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;  // zero stays zero

    /// Euclidean division: returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    /// Exact division; throws std::domain_error if the remainder is nonzero.
    UniPoly exact_div(const UniPoly& d) const;
    bool divides(const UniPoly& f) const;  // *this | f

    /// Multiplies through by the lcm of coefficient denominators and divides
    /// by the gcd of numerators: integer-primitive with positive leading
    /// coefficient. Zero stays zero.
    UniPoly integer_primitive() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

private:
    void check_same_var(const UniPoly& o) const;

    std::string var_;
    std::map<int, Rational> terms_;
};

/// Monic gcd; gcd(0,0) = 0, gcd(f,0) = monic f.
/// Throws std::invalid_argument when the variables differ.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b);

/// Monic product of the distinct irreducible factors of f. Throws on f = 0.
UniPoly squarefree_part(const UniPoly& f);

/// Yun squarefree decomposition: f = lc * prod parts[i].poly^parts[i].mult
/// with the parts monic, squarefree and pairwise coprime.
struct SquarefreeFactor {
    UniPoly poly;
    int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f);

/// All rational roots of f != 0 with multiplicities.
std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& f);

}  // namespace aode
