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

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace sepcurve {

template <class T>
class Polynomial;

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

/// Ring operations the polynomial template needs from its coefficients.
/// Specialized for Rat and, recursively, for Polynomial<U>.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return sgn(a) == 0; }
    static Rat from_rat(const Rat& r) { return r; }
    static Rat exact_div(const Rat& a, const Rat& b) {
        if (is_zero(b)) throw InvalidArgument("division by zero");
        return a / b;
    }
};

template <class U>
struct RingTraits<Polynomial<U>> {
    static Polynomial<U> zero() { return {}; }
    static Polynomial<U> one() { return Polynomial<U>::constant(RingTraits<U>::one()); }
    static bool is_zero(const Polynomial<U>& a) { return a.is_zero(); }
    static Polynomial<U> from_rat(const Rat& r) { return Polynomial<U>::constant(RingTraits<U>::from_rat(r)); }
    static Polynomial<U> exact_div(const Polynomial<U>& a, const Polynomial<U>& b);
};

/// Dense univariate polynomial, coefficients ascending by exponent. The
/// highest stored coefficient is never zero; the zero polynomial stores
/// nothing.
template <class T>
class Polynomial {
 public:
    using coefficient_type = T;
    using Traits = RingTraits<T>;

    Polynomial() = default;
    explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
    Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

    static Polynomial monomial(T c, std::size_t exponent) {
        std::vector<T> coefficients(exponent + 1, Traits::zero());
        coefficients[exponent] = std::move(c);
        return Polynomial(std::move(coefficients));
    }

    /// The polynomial "x".
    static Polynomial variable() { return monomial(Traits::one(), 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    int degree() const noexcept { return c_.empty() ? kDegreeOfZero : static_cast<int>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }

    const std::vector<T>& coefficients() const noexcept { return c_; }

    /// Coefficient of x^k; zero beyond the degree.
    T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Traits::zero(); }
    const T& operator[](std::size_t k) const { return c_.at(k); }

    const T& leading() const {
        if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Traits::zero());
        for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Traits::zero());
        for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    Polynomial& operator*=(const T& scalar) {
        if (Traits::is_zero(scalar)) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= scalar;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

    friend Polynomial operator-(Polynomial p) {
        for (auto& c : p.c_) c = -c;
        return p;
    }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return {};
        std::vector<T> out(lhs.c_.size() + rhs.c_.size() - 1, Traits::zero());
        for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
            if (Traits::is_zero(lhs.c_[i])) continue;
            for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(Polynomial p, const T& scalar) { return p *= scalar; }
    friend Polynomial operator*(const T& scalar, Polynomial p) { return p *= scalar; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Horner evaluation at a value of any ring V that the coefficients embed
    /// into (Rat, polynomials, rational functions, ...).
    template <class V>
    V operator()(const V& x) const {
        V acc = RingTraits<V>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + embed<V>(*it);
        return acc;
    }

 private:
    template <class V>
    static V embed(const T& c) {
        if constexpr (std::is_same_v<V, T>) {
            return c;
        } else {
            static_assert(std::is_same_v<T, Rat>, "only rational coefficients embed into other rings");
            return RingTraits<V>::from_rat(c);
        }
    }

    void trim() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

using Poly = Polynomial<Rat>;

/// Polynomials in x whose coefficients are polynomials in a second variable.
using BiPoly = Polynomial<Poly>;

template <class T>
Polynomial<T> derivative(const Polynomial<T>& p) {
    if (p.degree() < 1) return {};
    std::vector<T> out;
    out.reserve(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * RingTraits<T>::from_rat(Rat(static_cast<long>(k))));
    return Polynomial<T>(std::move(out));
}

/// Quotient and remainder over a field.
inline std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) throw InvalidArgument("division by the zero polynomial");
    if (dividend.degree() < divisor.degree()) return {Poly{}, dividend};
    std::vector<Rat> rem = dividend.coefficients();
    const int dd = divisor.degree();
    std::vector<Rat> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
    const Rat& lead = divisor.leading();
    for (int k = dividend.degree(); k >= dd; --k) {
        Rat q = rem[static_cast<std::size_t>(k)] / lead;
        if (sgn(q) == 0) continue;
        quot[static_cast<std::size_t>(k - dd)] = q;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

inline bool divides(const Poly& divisor, const Poly& p) { return (p % divisor).is_zero(); }

/// a / b where b is known to divide a; a nonzero remainder is a logic error.
inline Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvariantViolation("inexact polynomial division");
    return q;
}

template <class U>
Polynomial<U> RingTraits<Polynomial<U>>::exact_div(const Polynomial<U>& a, const Polynomial<U>& b) {
    if constexpr (std::is_same_v<U, Rat>) {
        return exact_quotient(a, b);
    } else {
        // Only needed for ring towers deeper than Q[z][x], which nothing uses.
        static_assert(std::is_same_v<U, Rat>, "exact division implemented over Q[z] only");
        return {};
    }
}

inline Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * Rat(1 / p.leading());
}

/// Scales p to integer coefficients with content 1 and positive leading
/// coefficient.
inline Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Int den_lcm(1);
    for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Int content(0);
    for (const auto& c : p.coefficients()) {
        Int num = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    Rat scale = make_rat(den_lcm, content);
    if (sgn(p.leading()) < 0) scale = -scale;
    return p * scale;
}

/// p(inner(x)).
template <class T>
Polynomial<T> compose(const Poly& p, const Polynomial<T>& inner) {
    return p(inner);
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without division; works
/// over any integral domain of coefficients.
template <class T>
Polynomial<T> pseudo_remainder(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (b.is_zero()) throw InvalidArgument("pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    const int db = b.degree();
    int remaining = a.degree() - db + 1;
    const T& lb = b.leading();
    Polynomial<T> r = a;
    while (!r.is_zero() && r.degree() >= db) {
        Polynomial<T> shift = Polynomial<T>::monomial(r.leading(), static_cast<std::size_t>(r.degree() - db));
        r = r * lb - shift * b;
        --remaining;
    }
    for (; remaining > 0; --remaining) r *= lb;
    return r;
}

template <class T>
Polynomial<T> divide_coefficients(const Polynomial<T>& p, const T& d) {
    std::vector<T> out;
    out.reserve(p.size());
    for (const auto& c : p.coefficients()) out.push_back(RingTraits<T>::exact_div(c, d));
    return Polynomial<T>(std::move(out));
}

/// Human-readable form in the given variable, e.g. "3*x^4 - 4*x^3".
/// The output parses back to the same polynomial.
inline std::string format(const Poly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        Rat magnitude = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        bool unit = magnitude == 1;
        if (k == 0 || !unit) out += to_string(magnitude);
        if (k == 0) continue;
        if (!unit) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << format(p); }

}  // namespace sepcurve
