#include "delpair/poly_parser.hpp"

#include <cctype>
#include <optional>

#include "delpair/errors.hpp"

namespace delpair {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    int pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        int start = static_cast<int>(pos_);
        if (pos_ >= text_.size()) {
            tok_ = {Token::End, "", start};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = pos_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            tok_ = {Token::Number, text_.substr(pos_, j - pos_), start};
            pos_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = pos_;
            while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) ||
                                        text_[j] == '_'))
                ++j;
            tok_ = {Token::Ident, text_.substr(pos_, j - pos_), start};
            pos_ = j;
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+", start}; return;
            case '-': tok_ = {Token::Minus, "-", start}; return;
            case '*': tok_ = {Token::Star, "*", start}; return;
            case '/': tok_ = {Token::Slash, "/", start}; return;
            case '^': tok_ = {Token::Caret, "^", start}; return;
            case '(': tok_ = {Token::LParen, "(", start}; return;
            case ')': tok_ = {Token::RParen, ")", start}; return;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) +
                                     "' in polynomial expression",
                                 0, start + 1);
        }
    }
    const std::string& text_;
    size_t pos_ = 0;
    Token tok_;
};

// Evaluation domains: the parser is shared between polynomial and
// fraction-field contexts.
struct MPolyDomain {
    using V = MPoly;
    const std::vector<std::string>* vars;
    const BaseRing* ring;
    V from_rat(const Rat& r) const { return MPoly(RatFunc(r)); }
    V var(const std::string& name, int pos) const {
        if (ring->has_variable() && name == ring->variable())
            return MPoly(RatFunc::variable());
        for (const auto& v : *vars)
            if (v == name) return MPoly::variable(name);
        throw ParseError("unknown variable '" + name + "'", 0, pos + 1);
    }
    V div(const V& a, const V& b, int pos) const {
        if (b.is_zero()) throw ParseError("division by zero", 0, pos + 1);
        if (!b.is_constant())
            throw ParseError("division by a non-constant is not part of the polynomial grammar",
                             0, pos + 1);
        return a * MPoly(RatFunc(Rat(1)) / b.constant_value());
    }
    V pow(const V& a, long e) const { return a.pow(static_cast<unsigned long>(e)); }
};

struct ScalarDomain {
    using V = RatFunc;
    const BaseRing* ring;
    V from_rat(const Rat& r) const { return RatFunc(r); }
    V var(const std::string& name, int pos) const {
        if (ring->has_variable() && name == ring->variable()) return RatFunc::variable();
        throw ParseError("unknown variable '" + name + "' in a scalar expression", 0, pos + 1);
    }
    V div(const V& a, const V& b, int pos) const {
        if (b.is_zero()) throw ParseError("division by zero", 0, pos + 1);
        return a / b;
    }
    V pow(const V& a, long e) const { return a.pow(e); }
};

template <typename D>
class ExprParser {
public:
    ExprParser(Lexer& lex, const D& dom) : lex_(lex), dom_(dom) {}

    typename D::V parse() {
        auto v = sum();
        if (lex_.peek().kind != Token::End)
            throw ParseError("unexpected trailing input '" + lex_.peek().text + "'", 0,
                             lex_.peek().pos + 1);
        return v;
    }

private:
    using V = typename D::V;

    V sum() {
        V acc = product();
        while (true) {
            if (lex_.peek().kind == Token::Plus) {
                lex_.take();
                acc = acc + product();
            } else if (lex_.peek().kind == Token::Minus) {
                lex_.take();
                acc = acc - product();
            } else {
                return acc;
            }
        }
    }

    V product() {
        V acc = factor();
        while (true) {
            if (lex_.peek().kind == Token::Star) {
                lex_.take();
                acc = acc * factor();
            } else if (lex_.peek().kind == Token::Slash) {
                Token t = lex_.take();
                acc = dom_.div(acc, factor(), t.pos);
            } else {
                return acc;
            }
        }
    }

    V factor() {
        Token t = lex_.peek();
        if (t.kind == Token::Minus) {
            lex_.take();
            return dom_.from_rat(Rat(0)) - factor();
        }
        V base = atom();
        if (lex_.peek().kind == Token::Caret) {
            Token caret = lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Number)
                throw ParseError("exponent must be a nonnegative integer literal", 0, caret.pos + 1);
            long exp = std::stol(e.text);
            return dom_.pow(base, exp);
        }
        return base;
    }

    V atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Number:
                return dom_.from_rat(Rat(t.text));
            case Token::Ident:
                return dom_.var(t.text, t.pos);
            case Token::LParen: {
                V v = sum();
                Token close = lex_.take();
                if (close.kind != Token::RParen)
                    throw ParseError("expected ')'", 0, close.pos + 1);
                return v;
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'", 0, t.pos + 1);
        }
    }

    Lexer& lex_;
    const D& dom_;
};

}  // namespace

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                 const BaseRing& ring) {
    Lexer lex(text);
    MPolyDomain dom{&vars, &ring};
    return ExprParser<MPolyDomain>(lex, dom).parse();
}

RatFunc parse_scalar(const std::string& text, const BaseRing& ring) {
    Lexer lex(text);
    ScalarDomain dom{&ring};
    return ExprParser<ScalarDomain>(lex, dom).parse();
}

std::string scalar_text(const RatFunc& x, const BaseRing& ring) {
    return x.to_text(ring.variable());
}

}  // namespace delpair
