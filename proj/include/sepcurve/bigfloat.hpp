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

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "rational.hpp"

namespace sepcurve {

/// Owning MPFR float. Binary operations round to the larger precision of
/// their operands.
class BigFloat {
 public:
    explicit BigFloat(mpfr_prec_t precision = 256) {
        mpfr_init2(v_, precision);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const Rat& q, mpfr_prec_t precision) {
        mpfr_init2(v_, precision);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(long value, mpfr_prec_t precision) {
        mpfr_init2(v_, precision);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    BigFloat(const BigFloat& other) {
        mpfr_init2(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& other) noexcept : BigFloat(mpfr_prec_t{MPFR_PREC_MIN}) { mpfr_swap(v_, other.v_); }
    BigFloat& operator=(const BigFloat& other) {
        if (this != &other) {
            mpfr_set_prec(v_, other.precision());
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    /// Decimal text with the given number of significant digits.
    std::string to_string(int digits = 30) const {
        char* raw = nullptr;
        mpfr_asprintf(&raw, "%.*Rg", digits, v_);
        std::string out(raw);
        mpfr_free_str(raw);
        return out;
    }

    static BigFloat pi(mpfr_prec_t precision) {
        BigFloat out(precision);
        mpfr_const_pi(out.v_, MPFR_RNDN);
        return out;
    }

    static BigFloat pow2(long exponent, mpfr_prec_t precision) {
        BigFloat out(1L, precision);
        mpfr_mul_2si(out.v_, out.v_, exponent, MPFR_RNDN);
        return out;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat out(a.precision());
        mpfr_neg(out.v_, a.v_, MPFR_RNDN);
        return out;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

    friend BigFloat sqrt(const BigFloat& a) { return unary(a, mpfr_sqrt); }
    friend BigFloat abs(const BigFloat& a) { return unary(a, mpfr_abs); }
    friend BigFloat cos(const BigFloat& a) { return unary(a, mpfr_cos); }
    friend BigFloat sin(const BigFloat& a) { return unary(a, mpfr_sin); }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_hypot); }

 private:
    template <class Op>
    static BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
        BigFloat out(std::max(a.precision(), b.precision()));
        op(out.v_, a.v_, b.v_, MPFR_RNDN);
        return out;
    }
    template <class Op>
    static BigFloat unary(const BigFloat& a, Op op) {
        BigFloat out(a.precision());
        op(out.v_, a.v_, MPFR_RNDN);
        return out;
    }

    mpfr_t v_;
};

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t precision = 256) : re(precision), im(precision) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }
};

}  // namespace sepcurve
