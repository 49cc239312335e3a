#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "residua/errors.hpp"
#include "residua/polynomial.hpp"

namespace residua {

// Recursive-descent parser for polynomial text over a declared variable set.
//
//   expression := ['-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := '-' factor | primary ['^' natural]
//   primary    := rational | identifier | '(' expression ')'
//   rational   := digits ['/' digits]
//
// '*' is required between factors; '^' takes nonnegative integer exponents;
// identifiers must be declared in the VarSet.
namespace detail {

enum class TokKind { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i < s.size() && s[i] == '/') {
                std::size_t j = i + 1;
                if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j])))
                    throw parse_error("expected digits after '/'", i + 1);
                i = j;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            }
            out.push_back({TokKind::number, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({TokKind::ident, s.substr(start, i - start), start});
            continue;
        }
        TokKind k;
        switch (c) {
            case '+': k = TokKind::plus; break;
            case '-': k = TokKind::minus; break;
            case '*': k = TokKind::star; break;
            case '^': k = TokKind::caret; break;
            case '(': k = TokKind::lparen; break;
            case ')': k = TokKind::rparen; break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, s.substr(i, 1), i});
        ++i;
    }
    out.push_back({TokKind::end, "", s.size()});
    return out;
}

class PolyParser {
public:
    PolyParser(const std::string& text, const VarSet& vars)
        : vars_(vars), toks_(tokenize(text)) {}

    Polynomial run() {
        Polynomial p = expression();
        if (peek().kind != TokKind::end)
            throw parse_error("unexpected trailing input '" + peek().text + "'", peek().pos);
        return p;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }
    bool accept(TokKind k) {
        if (peek().kind == k) {
            ++i_;
            return true;
        }
        return false;
    }

    Polynomial expression() {
        bool negate = false;
        if (accept(TokKind::minus))
            negate = true;
        else
            accept(TokKind::plus);
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept(TokKind::plus)) {
                acc += term();
            } else if (accept(TokKind::minus)) {
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept(TokKind::star)) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        if (accept(TokKind::minus)) return -factor();
        Polynomial base = primary();
        if (accept(TokKind::caret)) {
            const Token& t = peek();
            if (t.kind == TokKind::minus)
                throw parse_error("negative exponent", t.pos);
            if (t.kind != TokKind::number)
                throw parse_error("expected integer exponent after '^'", t.pos);
            if (t.text.find('/') != std::string::npos)
                throw parse_error("non-integer exponent '" + t.text + "'", t.pos);
            take();
            unsigned long e = 0;
            for (char c : t.text) {
                e = e * 10 + static_cast<unsigned long>(c - '0');
                if (e > 100000) throw parse_error("exponent too large", t.pos);
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial primary() {
        const Token t = peek();
        switch (t.kind) {
            case TokKind::number:
                take();
                return Polynomial::constant(vars_, Rational::parse(t.text));
            case TokKind::ident: {
                take();
                auto idx = vars_.find(t.text);
                if (!idx) throw parse_error("undeclared variable '" + t.text + "'", t.pos);
                return Polynomial::variable(vars_, *idx);
            }
            case TokKind::lparen: {
                take();
                Polynomial p = expression();
                if (!accept(TokKind::rparen)) throw parse_error("expected ')'", peek().pos);
                return p;
            }
            default:
                throw parse_error("expected a number, variable, or '('", t.pos);
        }
    }

    const VarSet& vars_;
    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

}  // namespace detail

inline Polynomial parse(const std::string& text, const VarSet& vars) {
    return detail::PolyParser(text, vars).run();
}

}  // namespace residua
