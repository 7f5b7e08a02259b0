#include "aode/parser.hpp"

#include <cctype>

namespace aode {

namespace {

enum class Tok { Number, Symbol, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Semi, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip_ws();
        const int line = line_, col = col_;
        if (pos_ >= s_.size()) return {Tok::End, "", line, col};
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                num += advance();
            return {Tok::Number, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string sym;
            sym += advance();
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '\''))
                sym += advance();
            return {Tok::Symbol, sym, line, col};
        }
        switch (advance()) {
            case '+': return {Tok::Plus, "+", line, col};
            case '-': return {Tok::Minus, "-", line, col};
            case '*': return {Tok::Star, "*", line, col};
            case '/': return {Tok::Slash, "/", line, col};
            case '^': return {Tok::Caret, "^", line, col};
            case '(': return {Tok::LParen, "(", line, col};
            case ')': return {Tok::RParen, ")", line, col};
            case ',': return {Tok::Comma, ",", line, col};
            case ';': return {Tok::Semi, ";", line, col};
            default: throw ParseError("unexpected character", line, col);
        }
    }

private:
    char advance() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

// Value domain: polynomial in the mode's main variables over Q(t). Modes
// without t simply never populate it; division support is mode-gated.
struct Value {
    QtPoly poly;
};

struct Mode {
    std::vector<std::string> main_vars;  // polynomial variables
    bool allow_t = false;
    bool allow_division = false;         // general division (ratfunc-like)
    bool aode_derivative_check = false;  // reject y'' and higher
};

class Parser {
public:
    Parser(const std::string& text, Mode mode) : lex_(text), mode_(std::move(mode)) {
        cur_ = lex_.next();
    }

    Value parse_full() {
        Value v = expression();
        expect_end();
        return v;
    }

    std::vector<Value> parse_list(Tok separator) {
        std::vector<Value> out;
        out.push_back(expression());
        while (cur_.kind == separator) {
            consume();
            out.push_back(expression());
        }
        return out;
    }

    std::vector<std::vector<Value>> parse_rows() {
        std::vector<std::vector<Value>> rows;
        rows.push_back(parse_list(Tok::Comma));
        while (cur_.kind == Tok::Semi) {
            consume();
            rows.push_back(parse_list(Tok::Comma));
        }
        expect_end();
        return rows;
    }

    void expect_end() {
        if (cur_.kind != Tok::End)
            throw ParseError("unexpected trailing input", cur_.line, cur_.col);
    }

private:
    void consume() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur_.line, cur_.col); }

    Value make_const(const Rational& c) const {
        return {QtPoly::constant(mode_.main_vars, RatFunc(c))};
    }

    Value expression() {
        bool negate = false;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            if (cur_.kind == Tok::Minus) negate = !negate;
            consume();
        }
        Value acc = term();
        if (negate) acc.poly = -acc.poly;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool minus = cur_.kind == Tok::Minus;
            consume();
            Value rhs = term();
            acc.poly = minus ? acc.poly - rhs.poly : acc.poly + rhs.poly;
        }
        return acc;
    }

    Value term() {
        Value acc = factor();
        while (true) {
            if (cur_.kind == Tok::Star) {
                consume();
                Value rhs = factor();
                acc.poly = acc.poly * rhs.poly;
                continue;
            }
            if (cur_.kind == Tok::Slash) {
                if (!mode_.allow_division)
                    fail("division is not allowed in this mode");
                const Token slash = cur_;
                consume();
                Value rhs = factor();
                acc = divide(acc, rhs, slash);
                continue;
            }
            if (cur_.kind == Tok::Number || cur_.kind == Tok::Symbol ||
                cur_.kind == Tok::LParen)
                fail("implicit multiplication is not allowed; write '*'");
            break;
        }
        return acc;
    }

    Value divide(const Value& a, const Value& b, const Token& at) {
        if (b.poly.is_zero()) throw ParseError("division by zero", at.line, at.col);
        if (b.poly.is_constant()) {
            RatFunc c = b.poly.constant_term();
            return {a.poly.scaled(c.inverse())};
        }
        auto q = a.poly.divide_exact(b.poly);
        if (!q)
            throw ParseError("division must be by a coefficient or exact divisor", at.line,
                             at.col);
        return {*q};
    }

    Value factor() {
        Value base = primary();
        if (cur_.kind == Tok::Caret) {
            consume();
            bool neg = false;
            if (cur_.kind == Tok::Minus) {
                neg = true;
                consume();
            }
            if (cur_.kind != Tok::Number) fail("exponent must be an integer");
            long e = std::stol(cur_.text);
            consume();
            if (neg) {
                if (!mode_.allow_division) fail("negative exponents are not allowed in this mode");
                if (!base.poly.is_constant()) fail("negative exponent on a non-coefficient");
                RatFunc c = base.poly.constant_term();
                if (c.is_zero()) fail("negative power of zero");
                return {QtPoly::constant(mode_.main_vars, c.pow(static_cast<int>(-e)))};
            }
            base.poly = base.poly.pow(static_cast<int>(e));
        }
        return base;
    }

    Value primary() {
        if (cur_.kind == Tok::Number) {
            Rational n = Rational::from_string(cur_.text);
            consume();
            // Rational literal p/q in no-division modes.
            if (!mode_.allow_division && cur_.kind == Tok::Slash) {
                consume();
                if (cur_.kind != Tok::Number)
                    fail("expected an integer denominator in a rational literal");
                Rational d = Rational::from_string(cur_.text);
                if (d.is_zero()) fail("zero denominator");
                consume();
                return make_const(n / d);
            }
            return make_const(n);
        }
        if (cur_.kind == Tok::Minus) {
            consume();
            Value v = factor();
            v.poly = -v.poly;
            return v;
        }
        if (cur_.kind == Tok::LParen) {
            consume();
            Value v = expression();
            if (cur_.kind != Tok::RParen) fail("expected ')'");
            consume();
            return v;
        }
        if (cur_.kind == Tok::Symbol) {
            const std::string name = cur_.text;
            if (mode_.aode_derivative_check && name.size() > 2 && name.substr(0, 1) == "y" &&
                name.find("''") != std::string::npos)
                fail("derivative order greater than one");
            if (name == "t" && mode_.allow_t) {
                consume();
                return {QtPoly::constant(mode_.main_vars, RatFunc::variable("t"))};
            }
            for (size_t i = 0; i < mode_.main_vars.size(); ++i) {
                if (name == mode_.main_vars[i]) {
                    consume();
                    return {QtPoly::variable(mode_.main_vars, i)};
                }
            }
            fail("unknown variable '" + name + "' for this mode");
        }
        fail("expected a number, variable, or '('");
    }

    Lexer lex_;
    Mode mode_;
    Token cur_;
};

// Lower a Q(t)-coefficient value to a plain rational-coefficient polynomial
// over `vars` ("t" may be one of them).
QPoly lower_to_q(const QtPoly& p, const std::vector<std::string>& vars, int line = 1,
                 int col = 1) {
    QPoly out(vars);
    for (const auto& [e, c] : p.terms()) {
        if (!c.den().is_constant())
            throw ParseError("rational coefficients are not allowed in this mode", line, col);
        for (const auto& [k, cc] : c.num().terms()) {
            Exponents e2(vars.size(), 0);
            for (size_t i = 0; i < p.vars().size(); ++i) {
                size_t j = 0;
                for (; j < vars.size(); ++j)
                    if (vars[j] == p.vars()[i]) break;
                if (j == vars.size())
                    throw std::logic_error("lower_to_q: variable missing from target list");
                e2[j] = e[i];
            }
            if (k > 0) {
                size_t j = 0;
                for (; j < vars.size(); ++j)
                    if (vars[j] == "t") break;
                if (j == vars.size())
                    throw ParseError("t is not allowed in this mode", line, col);
                e2[j] = k;
            }
            out.add_term(e2, cc);
        }
    }
    return out;
}

}  // namespace

DiffPoly parse_aode(const std::string& text) {
    Mode m;
    m.main_vars = {"y", "y'"};
    m.allow_t = true;
    m.aode_derivative_check = true;
    Parser p(text, m);
    Value v = p.parse_full();
    if (v.poly.is_zero()) throw ParseError("equation is identically zero", 1, 1);
    QPoly q = lower_to_q(v.poly, aode_vars());
    if (q.degree(2) < 1)
        throw ParseError("equation has no y' term", 1, 1);
    return DiffPoly(std::move(q));
}

ProjPoly<Rational> parse_curve(const std::string& text) {
    Mode m;
    m.main_vars = proj_vars();
    Parser p(text, m);
    Value v = p.parse_full();
    if (v.poly.is_zero()) throw ParseError("curve is identically zero", 1, 1);
    QPoly q = lower_to_q(v.poly, proj_vars());
    // Rational coefficients: rebuild as MultiPoly<Rational>.
    try {
        return ProjPoly<Rational>(q);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

RatFunc parse_ratfunc(const std::string& text) {
    Mode m;
    m.allow_t = true;
    m.allow_division = true;
    Parser p(text, m);
    Value v = p.parse_full();
    return v.poly.is_zero() ? RatFunc() : v.poly.constant_term();
}

std::vector<RatFunc> parse_point(const std::string& text) {
    Mode m;
    m.allow_t = true;
    m.allow_division = true;
    Parser p(text, m);
    std::vector<RatFunc> out;
    for (const auto& v : p.parse_list(Tok::Comma))
        out.push_back(v.poly.is_zero() ? RatFunc() : v.poly.constant_term());
    p.expect_end();
    return out;
}

std::array<std::array<RatFunc, 3>, 3> parse_matrix(const std::string& text) {
    Mode m;
    m.allow_t = true;
    m.allow_division = true;
    Parser p(text, m);
    auto rows = p.parse_rows();
    if (rows.size() != 3 || rows[0].size() != 3 || rows[1].size() != 3 || rows[2].size() != 3)
        throw ParseError("expected a 3x3 matrix (rows separated by ';')", 1, 1);
    std::array<std::array<RatFunc, 3>, 3> out;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            out[i][j] = rows[i][j].poly.is_zero() ? RatFunc() : rows[i][j].poly.constant_term();
    return out;
}

QtPoly parse_poly_over_qt(const std::string& text) {
    Mode m;
    m.main_vars = proj_vars();
    m.allow_t = true;
    m.allow_division = true;
    Parser p(text, m);
    Value v = p.parse_full();
    if (v.poly.is_zero()) throw ParseError("polynomial is identically zero", 1, 1);
    return v.poly;
}

QPoly parse_algebraic(const std::string& text) {
    Mode m;
    m.main_vars = {"x"};
    m.allow_t = true;
    Parser p(text, m);
    Value v = p.parse_full();
    if (v.poly.is_zero()) throw ParseError("polynomial is identically zero", 1, 1);
    return lower_to_q(v.poly, {"t", "x"});
}

}  // namespace aode
