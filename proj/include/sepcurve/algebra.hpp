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

#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace sepcurve {

/// Monic gcd over Q via a primitive remainder sequence: every remainder is
/// rescaled to an integer polynomial with content 1 before the next step.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
    Poly x = primitive_part(a);
    Poly y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = primitive_part(r);
    }
    return monic(x);
}

inline bool coprime(const Poly& a, const Poly& b) { return poly_gcd(a, b).degree() == 0; }

inline bool is_squarefree(const Poly& p) {
    if (p.degree() < 1) return true;
    return coprime(p, derivative(p));
}

/// Monic product of the distinct irreducible factors of p.
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw InvalidArgument("squarefree part of the zero polynomial");
    if (p.degree() < 1) return Poly{Rat(1)};
    return monic(exact_quotient(p, poly_gcd(p, derivative(p))));
}

struct SquarefreeFactor {
    int multiplicity = 0;
    Poly factor;  ///< monic, squarefree, degree >= 1

    friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// p = unit * prod factor^multiplicity, factors pairwise coprime, listed by
/// increasing multiplicity.
struct SquarefreeDecomposition {
    Rat unit;
    std::vector<SquarefreeFactor> factors;
};

/// Yun's algorithm (characteristic zero).
inline SquarefreeDecomposition yun_decompose(const Poly& p) {
    if (p.degree() < 1) throw InvalidArgument("squarefree decomposition needs a nonconstant polynomial");
    SquarefreeDecomposition out;
    out.unit = p.leading();
    Poly f = monic(p);
    Poly df = derivative(f);
    Poly g = poly_gcd(f, df);
    Poly b = exact_quotient(f, g);
    Poly c = exact_quotient(df, g);
    Poly d = c - derivative(b);
    for (int i = 1; b.degree() >= 1; ++i) {
        Poly a = poly_gcd(b, d);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - derivative(b);
        if (a.degree() >= 1) out.factors.push_back({i, a});
    }
    return out;
}

/// Largest divisor V of u (keeping u's leading coefficient) with
/// gcd(V, w) = 1. deg u - deg V counts the roots of u, with multiplicity,
/// that are also roots of w.
inline Poly coprime_part(const Poly& u, const Poly& w) {
    if (u.is_zero() || w.is_zero()) throw InvalidArgument("coprime part with a zero polynomial");
    Poly v = u;
    for (;;) {
        Poly g = poly_gcd(v, w);
        if (g.degree() < 1) return v;
        v = exact_quotient(v, g);
    }
}

/// Subresultant PRS resultant over an integral domain D (Rat, or Q[z]).
/// Equals the Sylvester determinant, i.e.
///   Res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r).
template <class D>
D resultant(Polynomial<D> a, Polynomial<D> b) {
    using Traits = RingTraits<D>;
    if (a.is_zero() || b.is_zero()) throw InvalidArgument("resultant with a zero polynomial");
    auto power = [](const D& base, int e) {
        D r = Traits::one();
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    };
    D sign = Traits::one();
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    }
    if (b.degree() == 0) return sign * power(b.leading(), a.degree());
    D g = Traits::one();
    D h = Traits::one();
    for (;;) {
        const int delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
        Polynomial<D> r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return Traits::zero();
        b = divide_coefficients(r, D(g * power(h, delta)));
        g = a.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            h = Traits::exact_div(power(g, delta), power(h, delta - 1));
        }
        if (b.degree() == 0) {
            const int da = a.degree();
            D last = Traits::exact_div(power(b.leading(), da), power(h, da - 1));
            return sign * last;
        }
    }
}

/// Res_x(a, b) for a in Q[x] and b in Q[z][x]; the result is a polynomial
/// in z.
inline Poly resultant(const Poly& a, const BiPoly& b) {
    if (a.degree() < 1) throw InvalidArgument("resultant: first argument must be nonconstant");
    std::vector<Poly> lifted;
    lifted.reserve(a.size());
    for (const auto& c : a.coefficients()) lifted.push_back(Poly::constant(c));
    return resultant<Poly>(BiPoly(std::move(lifted)), b);
}

/// z - p(x), as a polynomial in x over Q[z].
inline BiPoly value_minus(const Poly& p) {
    std::vector<Poly> coefficients;
    coefficients.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) coefficients.push_back(Poly::constant(-p[k]));
    if (coefficients.empty()) coefficients.emplace_back();
    coefficients[0] += Poly::variable();
    return BiPoly(std::move(coefficients));
}

/// Monic polynomial in z whose roots are p(r) over the roots r of s, with
/// multiplicity: the normalized Res_x(s, z - p(x)).
inline Poly value_polynomial(const Poly& s, const Poly& p) { return monic(resultant(s, value_minus(p))); }

}  // namespace sepcurve
