/*
   Copyright 2026 The sepcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rational_function.hpp"

// Recursive-descent reader for expressions in one variable:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'|'/'] factor)*        juxtaposition multiplies
//   factor := ('+'|'-') factor | atom ['^' nat]
//   atom   := number | name | '(' expr ')'
//
// Numbers are integers or finite decimals; "a/b" is ordinary division.

namespace sepcurve {

namespace detail {

class ExpressionParser {
 public:
    ExpressionParser(std::string_view text, std::string_view variable) : text_(text), variable_(variable) {}

    RationalFunction run() {
        skip_space();
        if (at_end()) throw ParseError(pos_, "empty expression");
        RationalFunction out = expr();
        skip_space();
        if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return out;
    }

    const std::string& variable() const { return variable_; }

 private:
    static constexpr unsigned long kMaxExponent = 4096;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    static bool starts_name(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

    RationalFunction expr() {
        skip_space();
        RationalFunction acc;
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            RationalFunction rhs = term();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        for (;;) {
            skip_space();
            char c = peek();
            if (c == '*' || c == '/') {
                std::size_t at = pos_++;
                RationalFunction rhs = factor();
                if (c == '*') {
                    acc *= rhs;
                } else {
                    if (rhs.is_zero()) throw ParseError(at, "zero denominator");
                    acc /= rhs;
                }
            } else if (starts_name(c) || c == '(' || is_digit(c)) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor() {
        skip_space();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        if (peek() == '+') {
            ++pos_;
            return factor();
        }
        RationalFunction base = atom();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            while (is_digit(peek())) ++pos_;
            if (start == pos_) throw ParseError(pos_, "expected a nonnegative integer exponent");
            std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 6 || std::stoul(digits) > kMaxExponent)
                throw ParseError(start, "exponent too large");
            return pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    RationalFunction atom() {
        skip_space();
        if (at_end()) throw ParseError(pos_, "unexpected end of input");
        char c = peek();
        if (c == '(') {
            std::size_t open = pos_++;
            RationalFunction inner = expr();
            skip_space();
            if (peek() != ')') throw ParseError(at_end() ? pos_ : open, "unbalanced parenthesis");
            ++pos_;
            return inner;
        }
        if (is_digit(c) || c == '.') return number();
        if (starts_name(c)) return name();
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    RationalFunction number() {
        std::size_t start = pos_;
        while (is_digit(peek())) ++pos_;
        if (peek() == '.') {
            ++pos_;
            while (is_digit(peek())) ++pos_;
        }
        std::string_view literal = text_.substr(start, pos_ - start);
        try {
            return RationalFunction(parse_rational(literal));
        } catch (const ParseError& e) {
            throw ParseError(start + e.position(), "malformed number '" + std::string(literal) + "'");
        }
    }

    RationalFunction name() {
        std::size_t start = pos_;
        while (starts_name(peek()) || is_digit(peek())) ++pos_;
        std::string id(text_.substr(start, pos_ - start));
        if (variable_.empty()) variable_ = id;
        if (id != variable_) throw ParseError(start, "unknown variable '" + id + "'");
        return RationalFunction::variable();
    }

    std::string_view text_;
    std::string variable_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an element of Q(t). When `variable` is empty the first name seen
/// becomes the variable; any other name is an error.
inline RationalFunction parse_rational_function(std::string_view text, std::string_view variable = {}) {
    return detail::ExpressionParser(text, variable).run();
}

inline Poly parse_polynomial(std::string_view text, std::string_view variable = {}) {
    RationalFunction f = parse_rational_function(text, variable);
    if (!f.is_polynomial()) throw InvalidArgument("expression is not a polynomial: " + std::string(text));
    return f.numerator();
}

}  // namespace sepcurve
