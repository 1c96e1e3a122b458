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

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace sepcurve {

using Int = mpz_class;

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalized; all constructors below do so.
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw InvalidArgument("zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

/// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Int floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Rat pow(const Rat& base, unsigned long exponent) {
    Rat result(1);
    Rat b = base;
    while (exponent != 0) {
        if (exponent & 1UL) result *= b;
        b *= b;
        exponent >>= 1U;
    }
    return result;
}

/// The rational r with r^n == value, when one exists (the nonnegative one
/// for even n).
inline std::optional<Rat> exact_root(const Rat& value, unsigned long n) {
    if (n == 0) throw InvalidArgument("root of order zero");
    if (sgn(value) < 0 && n % 2 == 0) return std::nullopt;
    Int num = abs(value.get_num());
    Int den = value.get_den();
    Int rn;
    Int rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
    Rat r = make_rat(rn, rd);
    return sgn(value) < 0 ? Rat(-r) : r;
}

/// Parses an exact rational literal: "12", "-3/4", "0.25", "+1.5".
/// Decimals are converted exactly; anything else is rejected.
inline Rat parse_rational(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& why) -> Rat { throw ParseError(i, why); };
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::string& out) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out.push_back(text[i++]);
    };
    std::string whole;
    digits(whole);
    if (whole.empty()) return fail("expected digits");
    Rat value;
    if (i < text.size() && text[i] == '.') {
        ++i;
        std::string frac;
        digits(frac);
        if (frac.empty()) return fail("expected digits after decimal point");
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        value = make_rat(Int(whole + frac, 10), scale);
    } else if (i < text.size() && text[i] == '/') {
        ++i;
        std::string den;
        digits(den);
        if (den.empty()) return fail("expected denominator digits");
        Int d(den, 10);
        if (d == 0) return fail("zero denominator");
        value = make_rat(Int(whole, 10), d);
    } else {
        value = Rat(Int(whole, 10));
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size()) return fail("unexpected trailing characters");
    return negative ? Rat(-value) : value;
}

}  // namespace sepcurve
