#include "eiscong/parser.hpp"

#include <cctype>

#include "eiscong/errors.hpp"

namespace eiscong {

namespace {

struct Token {
    enum Kind { Integer, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind = End;
    Int value;       // Integer
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        cur_.pos = i_;
        if (i_ >= src_.size()) {
            cur_.kind = Token::End;
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            cur_.kind = Token::Integer;
            cur_.value = Int(src_.substr(i_, j - i_), 10);  // base fixed: "008" is 8
            i_ = j;
            return;
        }
        switch (c) {
            case 't': cur_.kind = Token::Var; break;
            case '+': cur_.kind = Token::Plus; break;
            case '-': cur_.kind = Token::Minus; break;
            case '*': cur_.kind = Token::Star; break;
            case '/': cur_.kind = Token::Slash; break;
            case '^': cur_.kind = Token::Caret; break;
            case '(': cur_.kind = Token::LParen; break;
            case ')': cur_.kind = Token::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
        ++i_;
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token cur_;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    RatFunc parse() {
        RatFunc r = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::End) {
            throw ParseError("unexpected token", t.pos);
        }
        return r;
    }

private:
    // expr := term (('+'|'-') term)*
    RatFunc expr() {
        RatFunc r = term();
        while (true) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Plus) {
                lex_.take();
                r = r + term();
            } else if (k == Token::Minus) {
                lex_.take();
                r = r - term();
            } else {
                return r;
            }
        }
    }

    // term := factor (('*'|'/') factor)*
    RatFunc term() {
        RatFunc r = factor();
        while (true) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Star) {
                lex_.take();
                r = r * factor();
            } else if (k == Token::Slash) {
                Token t = lex_.take();
                RatFunc d = factor();
                if (d.is_zero()) {
                    throw ParseError("division by the zero function", t.pos);
                }
                r = r / d;
            } else {
                return r;
            }
        }
    }

    // factor := '-' factor | power
    RatFunc factor() {
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            return -factor();
        }
        return power();
    }

    // power := atom ('^' exponent)?
    RatFunc power() {
        RatFunc base = atom();
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            base = base.pow(exponent());
        }
        return base;
    }

    // exponent := integer | '(' expr ')' evaluating to a nonnegative integer
    long exponent() {
        const Token& t = lex_.peek();
        long v = -1;
        std::size_t pos = t.pos;
        if (t.kind == Token::Integer) {
            Token tok = lex_.take();
            v = tok.value.fits_slong_p() ? tok.value.get_si() : kMaxExponent + 1;
        } else if (t.kind == Token::LParen) {
            lex_.take();
            RatFunc e = expr();
            expect(Token::RParen, "expected ')'");
            auto p = e.as_int_poly();
            if (!p || p->degree() > 0) {
                throw ParseError("exponent must be a constant integer", pos);
            }
            Int c = p->is_zero() ? Int(0) : p->coeff(0);
            if (c < 0) throw ParseError("exponent must be nonnegative", pos);
            v = c.fits_slong_p() ? c.get_si() : kMaxExponent + 1;
        } else {
            throw ParseError("expected a nonnegative integer exponent", pos);
        }
        if (v > kMaxExponent) {
            throw ParseError("exponent larger than " + std::to_string(kMaxExponent),
                             pos);
        }
        return v;
    }

    static constexpr long kMaxExponent = 999;

    // atom := integer | 't' | '(' expr ')'
    RatFunc atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Integer: {
                Token tok = lex_.take();
                return RatFunc{Rat(tok.value)};
            }
            case Token::Var:
                lex_.take();
                return RatFunc::variable();
            case Token::LParen: {
                lex_.take();
                RatFunc r = expr();
                expect(Token::RParen, "expected ')'");
                return r;
            }
            default:
                throw ParseError("expected an integer, 't' or '('", t.pos);
        }
    }

    void expect(Token::Kind k, const char* msg) {
        const Token& t = lex_.peek();
        if (t.kind != k) throw ParseError(msg, t.pos);
        lex_.take();
    }

    Lexer lex_;
};

std::string rat_coeff_str(const Rat& c) { return c.get_str(); }

// Renders a polynomial in descending powers: "2*t^2 - 2*t", "t^3 + 3".
std::string poly_str(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        Rat c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        bool first = out.empty();
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += rat_coeff_str(a);
        } else {
            if (a != 1) {
                out += rat_coeff_str(a);
                out += "*";
            }
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

bool needs_parens(const QPoly& p) {
    // more than one term, or a negative/rational leading unit
    long terms = 0;
    for (const auto& c : p.coeffs()) {
        if (c != 0) ++terms;
    }
    if (terms > 1) return true;
    if (p.is_zero()) return false;
    return p.leading() < 0 || p.leading().get_den() != 1;
}

}  // namespace

RatFunc parse_expression(const std::string& src) { return Parser(src).parse(); }

std::string to_string(const RatFunc& h) {
    if (h.is_zero()) return "0";
    if (h.den().degree() == 0 && h.den().coeff(0) == 1) return poly_str(h.num());
    std::string num = poly_str(h.num());
    std::string den = poly_str(h.den());
    if (needs_parens(h.num())) num = "(" + num + ")";
    if (needs_parens(h.den())) den = "(" + den + ")";
    return num + "/" + den;
}

std::string to_string(const IntPoly& p) { return poly_str(QPoly::from_int(p)); }

}  // namespace eiscong
