#include "aode/rational.hpp"

#include <ostream>

namespace aode {

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(s));
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw std::domain_error("Rational: negative power of zero");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    return invert ? Rational(den, num) : Rational(num, den);
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class num = v_.get_num();
    const mpz_class den = v_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace aode
