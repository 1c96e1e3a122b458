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

#include <string>
#include <utility>

#include "algebra.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

namespace sepcurve {

/// Element of Q(t) kept as a reduced fraction with monic denominator.
/// Zero is 0/1.
class RationalFunction {
 public:
    RationalFunction() : num_(), den_{Rat(1)} {}
    RationalFunction(Poly numerator) : num_(std::move(numerator)), den_{Rat(1)} {}
    RationalFunction(Poly numerator, Poly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
        normalize();
    }
    explicit RationalFunction(const Rat& c) : num_{c}, den_{Rat(1)} {}

    static RationalFunction variable() { return RationalFunction(Poly::variable()); }

    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.degree() < 1 && den_.degree() == 0; }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
    RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
    RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
    RationalFunction& operator/=(const RationalFunction& rhs) { return *this = *this / rhs; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction out = a;
        out.num_ = -out.num_;
        return out;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw InvalidArgument("division by the zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly{Rat(1)};
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
        Rat lead = den_.leading();
        if (lead != 1) {
            num_ *= Rat(1 / lead);
            den_ *= Rat(1 / lead);
        }
    }

    Poly num_;
    Poly den_;
};

template <>
struct RingTraits<RationalFunction> {
    static RationalFunction zero() { return {}; }
    static RationalFunction one() { return RationalFunction(Rat(1)); }
    static bool is_zero(const RationalFunction& f) { return f.is_zero(); }
    static RationalFunction from_rat(const Rat& r) { return RationalFunction(r); }
};

inline RationalFunction pow(const RationalFunction& f, unsigned exponent) {
    RationalFunction result(Rat(1));
    RationalFunction base = f;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

inline RationalFunction derivative(const RationalFunction& f) {
    const Poly& a = f.numerator();
    const Poly& b = f.denominator();
    return {derivative(a) * b - a * derivative(b), b * b};
}

/// p(f) through the homogenized form sum_k p_k a^k b^(n-k) / b^n, which
/// avoids a gcd per Horner step.
inline RationalFunction apply(const Poly& p, const RationalFunction& f) {
    if (p.is_zero()) return {};
    const Poly& a = f.numerator();
    const Poly& b = f.denominator();
    const int n = p.degree();
    std::vector<Poly> a_pow{Poly{Rat(1)}};
    std::vector<Poly> b_pow{Poly{Rat(1)}};
    for (int k = 1; k <= n; ++k) {
        a_pow.push_back(a_pow.back() * a);
        b_pow.push_back(b_pow.back() * b);
    }
    Poly num;
    for (int k = 0; k <= n; ++k) {
        const Rat& c = p[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        num += (a_pow[static_cast<std::size_t>(k)] * b_pow[static_cast<std::size_t>(n - k)]) * c;
    }
    return {num, b_pow[static_cast<std::size_t>(n)]};
}

inline std::string format(const RationalFunction& f, const std::string& var = "t") {
    if (f.is_polynomial()) return format(f.numerator(), var);
    return "(" + format(f.numerator(), var) + ")/(" + format(f.denominator(), var) + ")";
}

}  // namespace sepcurve
