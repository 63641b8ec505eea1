#pragma once

// Polynomial text grammar.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*          ('*' may be omitted)
//   factor := rational | varpow
//   varpow := variable ['^' natural]
//
// A rational is "p" or "p/q" with q > 0. Variables are written
// x1, x2, ...; the aliases x, y, z stand for x1, x2, x3 when the ring
// has arity <= 3. Whitespace is ignored between tokens; the digits of
// an indexed variable must follow the 'x' immediately.

#include <cctype>
#include <string>

#include "gpois/poly.hpp"

namespace gpois {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("syntax error at position " + std::to_string(pos) + ": " + what),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, int arity) : text_(text), arity_(arity) {}

    Poly parse() {
        skip_ws();
        if (at_end()) throw ParseError(pos_, "empty polynomial");
        Poly result = Poly::zero(arity_);
        int sign = consume_sign();
        result += parse_term().scaled(Rat(sign));
        skip_ws();
        while (!at_end()) {
            char c = text_[pos_];
            if (c != '+' && c != '-')
                throw ParseError(pos_, std::string("expected '+' or '-', found '") + c + "'");
            ++pos_;
            skip_ws();
            result += parse_term().scaled(Rat(c == '-' ? -1 : 1));
            skip_ws();
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    int consume_sign() {
        if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            int s = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
            return s;
        }
        return 1;
    }

    bool starts_factor() const {
        if (at_end()) return false;
        char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z';
    }

    Poly parse_term() {
        Poly product = parse_factor();
        for (;;) {
            skip_ws();
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (!starts_factor()) throw ParseError(pos_, "expected a factor after '*'");
                product = product * parse_factor();
            } else if (starts_factor()) {
                product = product * parse_factor();
            } else {
                return product;
            }
        }
    }

    Poly parse_factor() {
        if (at_end()) throw ParseError(pos_, "expected a factor");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_coefficient();
        if (c == 'x' || c == 'y' || c == 'z') return parse_varpow();
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    Poly parse_coefficient() {
        Int num = parse_natural("coefficient");
        Rat value(num);
        skip_ws();
        if (!at_end() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_pos = pos_;
            Int den = parse_natural("denominator");
            if (den == 0) throw ParseError(den_pos, "zero denominator");
            value = make_rat(num, den);
        }
        skip_ws();
        if (!at_end() && text_[pos_] == '^')
            throw ParseError(pos_, "'^' may only follow a variable");
        return Poly::constant(arity_, value);
    }

    Poly parse_varpow() {
        std::size_t var_pos = pos_;
        char c = text_[pos_++];
        int index = 0;
        if (c == 'x' && !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            Int k = parse_natural("variable index");
            if (k < 1 || k > arity_)
                throw ParseError(var_pos, "unknown variable: x" + k.get_str() +
                                              " (arity " + std::to_string(arity_) + ")");
            index = static_cast<int>(k.get_si());
        } else {
            if (arity_ > 3)
                throw ParseError(var_pos, std::string("unknown variable '") + c +
                                              "' (aliases x,y,z need arity <= 3)");
            index = c == 'x' ? 1 : c == 'y' ? 2 : 3;
            if (index > arity_)
                throw ParseError(var_pos, std::string("unknown variable '") + c + "' (arity " +
                                              std::to_string(arity_) + ")");
        }
        Int exponent = 1;
        skip_ws();
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            exponent = parse_natural("exponent");
        }
        Exponents e(arity_, 0);
        e[index - 1] = exponent;
        return Poly::monomial(arity_, std::move(e), Rat(1));
    }

    Int parse_natural(const std::string& what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(pos_, "expected " + what);
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return Int(digits);
    }

    const std::string& text_;
    int arity_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly poly_parse(const std::string& text, int arity) {
    if (arity < 1) throw std::invalid_argument("arity must be positive");
    return detail::PolyParser(text, arity).parse();
}

}  // namespace gpois
