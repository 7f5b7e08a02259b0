#include "aode/unipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace aode {

UniPoly UniPoly::constant(const Rational& c, std::string var) {
    UniPoly p(std::move(var));
    p.set_coeff(0, c);
    return p;
}

UniPoly UniPoly::variable(std::string var) {
    UniPoly p(std::move(var));
    p.set_coeff(1, Rational(1));
    return p;
}

UniPoly UniPoly::monomial(const Rational& c, int deg, std::string var) {
    if (deg < 0) throw std::invalid_argument("UniPoly: negative degree");
    UniPoly p(std::move(var));
    p.set_coeff(deg, c);
    return p;
}

UniPoly UniPoly::from_coeffs(const std::vector<Rational>& coeffs, std::string var) {
    UniPoly p(std::move(var));
    for (size_t i = 0; i < coeffs.size(); ++i) p.set_coeff(static_cast<int>(i), coeffs[i]);
    return p;
}

Rational UniPoly::coeff(int deg) const {
    auto it = terms_.find(deg);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational UniPoly::leading_coeff() const {
    return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

Rational UniPoly::trailing_coeff() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void UniPoly::set_coeff(int deg, const Rational& c) {
    if (deg < 0) throw std::invalid_argument("UniPoly: negative degree");
    if (c.is_zero())
        terms_.erase(deg);
    else
        terms_[deg] = c;
}

void UniPoly::check_same_var(const UniPoly& o) const {
    if (var_ != o.var_ && !is_zero() && !o.is_zero() && !(is_constant() || o.is_constant()))
        throw std::invalid_argument("UniPoly: variable mismatch (" + var_ + " vs " + o.var_ + ")");
}

UniPoly UniPoly::operator-() const {
    UniPoly r(var_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    check_same_var(o);
    for (const auto& [d, c] : o.terms_) {
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check_same_var(b);
    UniPoly r(a.is_constant() ? b.var_ : a.var_);
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) {
            auto it = r.terms_.find(da + db);
            if (it == r.terms_.end()) {
                Rational prod = ca * cb;
                if (!prod.is_zero()) r.terms_.emplace(da + db, std::move(prod));
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

UniPoly UniPoly::operator*(const Rational& c) const {
    UniPoly r(var_);
    if (c.is_zero()) return r;
    for (const auto& [d, cc] : terms_) r.terms_.emplace(d, cc * c);
    return r;
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("UniPoly: negative exponent");
    UniPoly r = constant(Rational(1), var_);
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    // Horner over the sparse support.
    Rational acc(0);
    int prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (prev >= 0) acc *= x.pow(prev - it->first);
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0) acc *= x.pow(prev);
    return acc;
}

UniPoly UniPoly::derivative() const {
    UniPoly r(var_);
    for (const auto& [d, c] : terms_)
        if (d > 0) r.terms_.emplace(d - 1, c * Rational(d));
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    check_same_var(d);
    UniPoly q(var_), r = *this;
    const int dd = d.degree();
    const Rational lead_inv = d.leading_coeff().inverse();
    while (!r.is_zero() && r.degree() >= dd) {
        const int shift = r.degree() - dd;
        const Rational c = r.leading_coeff() * lead_inv;
        q.set_coeff(shift, c);
        UniPoly sub = d * c;
        UniPoly shifted(var_);
        for (const auto& [deg, cc] : sub.terms_) shifted.terms_.emplace(deg + shift, cc);
        r -= shifted;
    }
    return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
    return q;
}

bool UniPoly::divides(const UniPoly& f) const {
    if (is_zero()) return f.is_zero();
    return f.divmod(*this).second.is_zero();
}

UniPoly UniPoly::integer_primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [d, c] : terms_) {
        mpz_class den = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    UniPoly scaled = *this * Rational(den_lcm);
    for (const auto& [d, c] : scaled.terms_) {
        mpz_class num = c.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    }
    UniPoly r = scaled * Rational(mpz_class(1), num_gcd);
    if (r.leading_coeff().sign() < 0) r = -r;
    return r;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [d, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (d == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var_;
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (!a.is_zero() && !b.is_zero() && !a.is_constant() && !b.is_constant() &&
        a.var() != b.var())
        throw std::invalid_argument("poly_gcd: variable mismatch");
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var());
    UniPoly g = poly_gcd(a, b);
    return (a * b).exact_div(g).monic();
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (f.is_constant()) return UniPoly::constant(Rational(1), f.var());
    UniPoly g = poly_gcd(f, f.derivative());
    return f.exact_div(g).monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<SquarefreeFactor> out;
    UniPoly p = f.monic();
    if (p.is_constant()) return out;
    // Yun's algorithm.
    UniPoly d = p.derivative();
    UniPoly a = poly_gcd(p, d);
    UniPoly b = p.exact_div(a);
    UniPoly c = d.exact_div(a);
    int i = 1;
    while (b.degree() > 0) {
        UniPoly diff = c - b.derivative();
        UniPoly g = poly_gcd(b, diff);
        if (g.degree() > 0) out.push_back({g, i});
        b = b.exact_div(g);
        c = diff.exact_div(g);
        ++i;
    }
    return out;
}

namespace {

// Divisors of |n| (positive only), aborting past `cap` divisors.
std::vector<mpz_class> divisors_of(const mpz_class& n, size_t cap) {
    mpz_class a = abs(n);
    if (a == 0) throw std::domain_error("divisors_of: zero");
    std::vector<mpz_class> divs;
    mpz_class i(1);
    for (; i * i <= a; ++i) {
        if (a % i == 0) {
            divs.push_back(i);
            mpz_class j = a / i;
            if (j != i) divs.push_back(j);
            if (divs.size() > cap)
                throw std::runtime_error("rational_roots: divisor budget exceeded");
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<std::pair<Rational, int>> out;
    UniPoly p = f;
    // Strip the root at 0.
    int zero_mult = p.trailing_degree();
    if (zero_mult > 0) {
        out.emplace_back(Rational(0), zero_mult);
        UniPoly shifted(p.var());
        for (const auto& [d, c] : p.terms()) shifted.set_coeff(d - zero_mult, c);
        p = shifted;
    }
    if (p.is_constant()) return out;
    UniPoly zp = p.integer_primitive();
    const auto num_divs = divisors_of(zp.trailing_coeff().numerator(), 4096);
    const auto den_divs = divisors_of(zp.leading_coeff().numerator(), 4096);
    for (const auto& a : num_divs) {
        for (const auto& b : den_divs) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign > 0 ? a : mpz_class(-a), b);
                if (!zp.eval(cand).is_zero()) continue;
                int mult = 0;
                UniPoly lin = UniPoly::variable(p.var()) - UniPoly::constant(cand, p.var());
                UniPoly q = zp;
                while (true) {
                    auto [quot, rem] = q.divmod(lin);
                    if (!rem.is_zero()) break;
                    q = quot;
                    ++mult;
                }
                out.emplace_back(cand, mult);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace aode
