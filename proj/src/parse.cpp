#include "resolvent/parse.hpp"

#include <cctype>

namespace resolvent {

namespace {

struct Token {
    enum class Kind { Number, Symbol, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t pos;
    Rational value;     // Number
    std::string name;   // Symbol
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= s_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            std::string num = s_.substr(start, i_ - start);
            std::string den = "1";
            if (i_ < s_.size() && s_[i_] == '/') {
                std::size_t save = i_;
                ++i_;
                std::size_t dstart = i_;
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
                if (i_ == dstart) {
                    i_ = save;  // lone '/': not part of the number
                } else {
                    den = s_.substr(dstart, i_ - dstart);
                }
            }
            tok_.kind = Token::Kind::Number;
            tok_.value = make_rational(Integer(num), Integer(den));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            ++i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            tok_.kind = Token::Kind::Symbol;
            tok_.name = s_.substr(start, i_ - start);
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_.kind = Token::Kind::Plus; return;
            case '-': tok_.kind = Token::Kind::Minus; return;
            case '*': tok_.kind = Token::Kind::Star; return;
            case '^': tok_.kind = Token::Kind::Caret; return;
            case '(': tok_.kind = Token::Kind::LParen; return;
            case ')': tok_.kind = Token::Kind::RParen; return;
            default: throw parse_error(std::string("unexpected character '") + c + "'", tok_.pos);
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

// Algebra must provide: P from_number(Rational), P var(name, pos), and the
// ring operations via +, -, * plus pow(P, ulong).
template <class Algebra>
class Parser {
public:
    using P = typename Algebra::Poly;

    Parser(const std::string& text, Algebra alg) : lex_(text), alg_(alg) {}

    P parse() {
        P e = expr();
        if (lex_.peek().kind != Token::Kind::End) throw parse_error("trailing input", lex_.peek().pos);
        return e;
    }

private:
    P expr() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            neg = true;
        } else if (lex_.peek().kind == Token::Kind::Plus) {
            lex_.take();
        }
        P acc = term();
        if (neg) acc = alg_.negate(acc);
        for (;;) {
            if (lex_.peek().kind == Token::Kind::Plus) {
                lex_.take();
                acc = acc + term();
            } else if (lex_.peek().kind == Token::Kind::Minus) {
                lex_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    P term() {
        P acc = factor();
        for (;;) {
            const auto k = lex_.peek().kind;
            if (k == Token::Kind::Star) {
                lex_.take();
                acc = acc * factor();
            } else if (k == Token::Kind::Number || k == Token::Kind::Symbol || k == Token::Kind::LParen) {
                acc = acc * factor();  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    P factor() {
        P base = primary();
        if (lex_.peek().kind == Token::Kind::Caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::Number || !is_integer(e.value) || sgn(e.value) < 0)
                throw parse_error("exponent must be a nonnegative integer", e.pos);
            if (!e.value.get_num().fits_ulong_p()) throw parse_error("exponent too large", e.pos);
            base = alg_.pow(base, e.value.get_num().get_ui());
        }
        return base;
    }

    P primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Number:
                return alg_.from_number(t.value);
            case Token::Kind::Symbol:
                return alg_.var(t.name, t.pos);
            case Token::Kind::LParen: {
                P e = expr();
                Token close = lex_.take();
                if (close.kind != Token::Kind::RParen) throw parse_error("expected ')'", close.pos);
                return e;
            }
            default:
                throw parse_error("expected number, variable or '('", t.pos);
        }
    }

    Lexer lex_;
    Algebra alg_;
};

struct UniAlgebra {
    using Poly = UniPoly<Rational>;
    std::string variable;

    Poly from_number(const Rational& q) const { return Poly::constant(q); }
    Poly var(const std::string& name, std::size_t pos) const {
        if (name != variable) throw parse_error("unknown variable '" + name + "'", pos);
        return Poly::monomial(Rational(1), 1);
    }
    Poly negate(const Poly& p) const { return -p; }
    Poly pow(const Poly& p, unsigned long e) const { return poly_pow(p, e); }
};

struct MultiAlgebra {
    using Poly = MultiPoly<Rational>;
    int nvars;

    Poly from_number(const Rational& q) const { return Poly::constant(nvars, q); }
    Poly var(const std::string& name, std::size_t pos) const {
        if (name.size() < 2 || name[0] != 'x') throw parse_error("unknown variable '" + name + "'", pos);
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw parse_error("unknown variable '" + name + "'", pos);
        const long idx = std::stol(name.substr(1));
        if (idx < 1 || idx > nvars) throw parse_error("variable index out of range in '" + name + "'", pos);
        return Poly::variable(nvars, static_cast<int>(idx - 1), Rational(1));
    }
    Poly negate(const Poly& p) const { return -p; }
    Poly pow(const Poly& p, unsigned long e) const { return p.pow(e, Rational(1)); }
};

}  // namespace

UniPoly<Rational> parse_poly(const std::string& text, const std::string& variable) {
    Parser<UniAlgebra> p(text, UniAlgebra{variable});
    return p.parse();
}

MultiPoly<Rational> parse_multipoly(const std::string& text, int nvars) {
    Parser<MultiAlgebra> p(text, MultiAlgebra{nvars});
    return p.parse();
}

}  // namespace resolvent
