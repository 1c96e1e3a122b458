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

#include <optional>
#include <vector>

#include "algebra.hpp"
#include "polynomial.hpp"

namespace sepcurve {

/// Proof that P(X) - Q(Y) has a factor X - (aY + b) over the algebraic
/// closure: every root a of `scaling` together with b = shift(a) gives
/// P(aY + b) = Q(Y) identically.
struct LinearFactorCertificate {
    int degree = 0;          ///< n = deg P = deg Q
    Rat leading_ratio;       ///< c = lc(Q) / lc(P); every admissible a has a^n = c
    Poly scaling;            ///< monic, divides a^n - c
    Poly shift;              ///< b as a polynomial in a (valid modulo a^n - c)

    bool admits(const Rat& a) const { return sgn(scaling(a)) == 0; }
    Rat shift_at(const Rat& a) const { return shift(a); }

    /// Rational roots of `scaling`; they are rational n-th roots of c.
    std::vector<Rat> rational_scalings() const {
        std::vector<Rat> out;
        auto root = exact_root(leading_ratio, static_cast<unsigned long>(degree));
        if (!root) return out;
        if (admits(*root)) out.push_back(*root);
        Rat negated = -*root;
        if (negated != *root && admits(negated)) out.push_back(negated);
        return out;
    }

    friend bool operator==(const LinearFactorCertificate&, const LinearFactorCertificate&) = default;
};

/// Decides whether some a != 0, b over Qbar satisfy P(aY + b) = Q(Y), without
/// leaving Q: b is solved from the Y^(n-1) coefficient as a polynomial in a,
/// every other coefficient condition is reduced modulo a^n - c, and the gcd
/// of all conditions with a^n - c is the certificate.
inline std::optional<LinearFactorCertificate> detect_linear_factor(const Poly& p, const Poly& q) {
    if (p.degree() != q.degree() || p.degree() < 1) return std::nullopt;
    const int n = p.degree();
    const auto un = static_cast<std::size_t>(n);
    const Rat c = q.leading() / p.leading();

    Poly modulus = Poly::monomial(Rat(1), un) - Poly{c};
    Poly shift = Poly{Rat(-p[un - 1] * c), Rat(q[un - 1])} * Rat(1 / (Rat(n) * p.leading() * c));

    BiPoly inner{shift, Poly::variable()};
    BiPoly substituted = p(inner);

    Poly common = modulus;
    for (std::size_t k = 0; k <= un; ++k) {
        Poly condition = (substituted.coefficient(k) - Poly{q[k]}) % modulus;
        if (condition.is_zero()) continue;
        common = poly_gcd(common, condition);
        if (common.degree() < 1) return std::nullopt;
    }
    return LinearFactorCertificate{n, c, monic(common), shift};
}

}  // namespace sepcurve
