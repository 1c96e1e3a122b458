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
#include <variant>
#include <vector>

#include "algebra.hpp"
#include "bigfloat.hpp"
#include "critical.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

// Floating-point shadow of the exact critical-value machinery. Used by the
// test suite and the oracle-check subcommand only; no verdict depends on it.

namespace sepcurve {

struct ApproxRoot {
    BigFloat re;
    BigFloat im;
    BigFloat radius;    ///< n |A(z)| / |A'(z)|, a disc around z holding a root
    BigFloat residual;  ///< |A(z)|
};

namespace detail {

inline std::vector<BigComplex> to_complex(const Poly& a, mpfr_prec_t prec) {
    std::vector<BigComplex> out;
    out.reserve(a.size());
    for (const Rat& c : a.coefficients()) out.emplace_back(BigFloat(c, prec), BigFloat(prec));
    return out;
}

inline BigComplex horner(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
    BigComplex acc = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Fujiwara bound on the moduli of the roots.
inline BigFloat root_bound(const Poly& a, mpfr_prec_t prec) {
    const int n = a.degree();
    BigFloat lead = abs(BigFloat(a.leading(), prec));
    BigFloat best(prec);
    for (int k = 1; k <= n; ++k) {
        BigFloat ratio = abs(BigFloat(a[n - k], prec)) / lead;
        if (k == n) ratio = ratio / BigFloat(2L, prec);
        if (ratio.is_zero()) continue;
        BigFloat r(prec);
        mpfr_rootn_ui(r.get(), ratio.get(), static_cast<unsigned long>(k), MPFR_RNDU);
        if (r > best) best = r;
    }
    best = best * BigFloat(2L, prec);
    return best.is_zero() ? BigFloat(1L, prec) : best;
}

}  // namespace detail

/// All complex roots of a squarefree A by Aberth-Ehrlich iteration.
inline std::vector<ApproxRoot> numeric_roots(const Poly& a, long precision_bits = 256) {
    if (precision_bits < 64) throw InvalidArgument("precision must be at least 64 bits");
    if (a.degree() < 1) throw InvalidArgument("numeric_roots needs a nonconstant polynomial");
    if (!is_squarefree(a)) throw InvalidArgument("numeric_roots needs a squarefree polynomial");

    const auto prec = static_cast<mpfr_prec_t>(precision_bits);
    const int n = a.degree();
    const auto coeffs = detail::to_complex(a, prec);
    const auto dcoeffs = detail::to_complex(derivative(a), prec);

    std::vector<BigComplex> z;
    {
        BigFloat r = detail::root_bound(a, prec);
        BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
        BigFloat offset = BigFloat(Rat(7, 10), prec);
        for (int k = 0; k < n; ++k) {
            BigFloat theta = two_pi * BigFloat(k, prec) / BigFloat(n, prec) + offset;
            z.emplace_back(r * cos(theta), r * sin(theta));
        }
    }

    const BigFloat step_tol = BigFloat::pow2(-(precision_bits - 16), prec);
    const int budget = 500;
    int iterations = 0;
    int polish = 2;
    for (;; ++iterations) {
        if (iterations >= budget)
            throw NumericFailure("root iteration did not converge after " + std::to_string(budget) +
                                 " steps (degree " + std::to_string(n) + ")");
        bool settled = true;
        for (int k = 0; k < n; ++k) {
            BigComplex value = detail::horner(coeffs, z[k]);
            if (value.re.is_zero() && value.im.is_zero()) continue;
            BigComplex ratio = value / detail::horner(dcoeffs, z[k]);
            BigComplex sum(prec);
            for (int j = 0; j < n; ++j)
                if (j != k) sum = sum + BigComplex(BigFloat(1L, prec), BigFloat(prec)) / (z[k] - z[j]);
            BigComplex one(BigFloat(1L, prec), BigFloat(prec));
            BigComplex step = ratio / (one - ratio * sum);
            z[k] = z[k] - step;
            BigFloat scale = abs(z[k]);
            if (scale < BigFloat(1L, prec)) scale = BigFloat(1L, prec);
            if (abs(step) > step_tol * scale) settled = false;
        }
        if (settled && polish-- == 0) break;
    }

    const BigFloat limit = BigFloat::pow2(-precision_bits / 2, prec);
    std::vector<ApproxRoot> out;
    for (const auto& root : z) {
        BigFloat residual = abs(detail::horner(coeffs, root));
        if (!(residual < limit))
            throw NumericFailure("residual " + residual.to_string(6) + " above 2^-" +
                                 std::to_string(precision_bits / 2) + " after " + std::to_string(iterations) +
                                 " steps");
        BigFloat slope = abs(detail::horner(dcoeffs, root));
        BigFloat radius = residual.is_zero() ? BigFloat::pow2(-precision_bits, prec)
                                             : BigFloat(n, prec) * residual / slope;
        out.push_back({root.re, root.im, radius, residual});
    }
    return out;
}

struct NumericMatch {
    MatchMatrix matrix;
    Rat b0_sum;  ///< weight of unmatched critical points of P
    Rat b1_sum;  ///< weight of unmatched critical points of Q

    friend bool operator==(const NumericMatch&, const NumericMatch&) = default;
};

struct Ambiguous {
    std::string detail;
};

using CrossCheckResult = std::variant<NumericMatch, Ambiguous>;

namespace detail {

struct NumericCriticalValue {
    int multiplicity;
    BigComplex value;
};

inline std::vector<NumericCriticalValue> numeric_critical_values(const Poly& p, long precision_bits) {
    const auto prec = static_cast<mpfr_prec_t>(precision_bits);
    const auto coeffs = to_complex(p, prec);
    std::vector<NumericCriticalValue> out;
    for (const auto& [e, s] : yun_decompose(derivative(p)).factors) {
        if (s.degree() < 1) continue;
        for (const auto& root : numeric_roots(s, precision_bits))
            out.push_back({e, horner(coeffs, BigComplex(root.re, root.im))});
    }
    return out;
}

}  // namespace detail

/// Pairs critical values of P and Q by evaluating at numerically found
/// critical points. Cross distances in [tol, 10 tol) are reported as
/// Ambiguous rather than guessed.
inline CrossCheckResult numeric_cross_check(const Poly& p, const Poly& q, const Rat& tolerance = pow(Rat(1, 10), 20),
                                            long precision_bits = 256) {
    if (tolerance <= 0) throw InvalidArgument("tolerance must be positive");
    if (p.degree() < 2 || q.degree() < 2) throw InvalidArgument("polynomial must be nonlinear");
    const auto prec = static_cast<mpfr_prec_t>(precision_bits);
    const auto pv = detail::numeric_critical_values(p, precision_bits);
    const auto qv = detail::numeric_critical_values(q, precision_bits);
    const BigFloat tol(tolerance, prec);
    const BigFloat band = tol * BigFloat(10L, prec);

    NumericMatch out;
    std::vector<bool> q_matched(qv.size(), false);
    long b0 = 0;
    for (const auto& a : pv) {
        bool matched = false;
        for (std::size_t j = 0; j < qv.size(); ++j) {
            BigFloat distance = abs(a.value - qv[j].value);
            if (distance < tol) {
                ++out.matrix.counts[{a.multiplicity, qv[j].multiplicity}];
                ++out.matrix.l0;
                q_matched[j] = true;
                matched = true;
            } else if (distance < band) {
                return Ambiguous{"cross distance " + distance.to_string(6) + " inside the ambiguity band"};
            }
        }
        if (!matched) b0 += a.multiplicity;
    }
    long b1 = 0;
    for (std::size_t j = 0; j < qv.size(); ++j)
        if (!q_matched[j]) b1 += qv[j].multiplicity;
    out.b0_sum = Rat(b0);
    out.b1_sum = Rat(b1);
    return out;
}

}  // namespace sepcurve
