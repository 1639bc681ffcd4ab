#include <cctype>
#include <string>
#include <vector>

#include "polymat/poly.hpp"

namespace polymat {
namespace {

enum class Tok { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= s_.size()) return {Tok::end, "", start};
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Tok::number, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_ + 1;
            while (j < s_.size() &&
                   std::isalnum(static_cast<unsigned char>(s_[j])))
                ++j;
            Token t{Tok::ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {Tok::plus, "+", start};
            case '-': return {Tok::minus, "-", start};
            case '*': return {Tok::star, "*", start};
            case '^': return {Tok::caret, "^", start};
            case '/': return {Tok::slash, "/", start};
            case '(': return {Tok::lparen, "(", start};
            case ')': return {Tok::rparen, ")", start};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(RingPtr ring, const std::string& text)
        : ring_(std::move(ring)), lexer_(text) {
        advance();
    }

    Poly run() {
        if (cur_.kind == Tok::end) throw ParseError("empty polynomial", 0);
        Poly p = expression();
        expect(Tok::end, "end of input");
        return p;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind)
            throw ParseError("expected " + what + " but found " + describe(cur_),
                             cur_.pos);
        advance();
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::end) return "end of input";
        return "'" + t.text + "'";
    }

    Poly expression() {
        bool negate = false;
        if (cur_.kind == Tok::plus) {
            advance();
        } else if (cur_.kind == Tok::minus) {
            negate = true;
            advance();
        }
        Poly acc = term();
        if (negate) acc = -acc;
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            const bool sub = cur_.kind == Tok::minus;
            advance();
            Poly t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (cur_.kind == Tok::star) {
            advance();
            acc *= factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        if (cur_.kind == Tok::caret) {
            advance();
            if (cur_.kind != Tok::number)
                throw ParseError("'^' takes a positive integer exponent", cur_.pos);
            const std::uint64_t e = parse_uint(cur_);
            if (e == 0)
                throw ParseError("'^' takes a positive integer exponent", cur_.pos);
            advance();
            base = base.pow(static_cast<std::uint32_t>(e));
        }
        return base;
    }

    Poly primary() {
        switch (cur_.kind) {
            case Tok::number: {
                const Token num = cur_;
                advance();
                Rational value(mpz_class(num.text, 10));
                if (cur_.kind == Tok::slash) {
                    advance();
                    if (cur_.kind != Tok::number)
                        throw ParseError("expected a denominator after '/'", cur_.pos);
                    mpz_class den(cur_.text, 10);
                    if (den == 0)
                        throw ParseError("zero denominator", cur_.pos);
                    advance();
                    value /= Rational(den);
                    value.canonicalize();
                }
                return Poly::constant(ring_, value);
            }
            case Tok::ident: {
                const std::size_t idx = ring_->var_index(cur_.text);
                if (idx == static_cast<std::size_t>(-1))
                    throw ParseError("unknown variable '" + cur_.text + "'", cur_.pos);
                advance();
                return Poly::variable(ring_, idx);
            }
            case Tok::lparen: {
                advance();
                Poly inner = expression();
                expect(Tok::rparen, "')'");
                return inner;
            }
            default:
                throw ParseError("expected a number, variable or '(' but found " +
                                     describe(cur_),
                                 cur_.pos);
        }
    }

    static std::uint64_t parse_uint(const Token& t) {
        mpz_class v(t.text, 10);
        if (!v.fits_ulong_p() || v > 100000)
            throw ParseError("exponent is too large", t.pos);
        return v.get_ui();
    }

    RingPtr ring_;
    Lexer lexer_;
    Token cur_{Tok::end, "", 0};
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    return Parser(ring, text).run();
}

}  // namespace polymat
