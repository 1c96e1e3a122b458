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
#include <string>
#include <variant>

#include "errors.hpp"
#include "funcfield.hpp"
#include "linear_factor.hpp"
#include "rational_function.hpp"

namespace sepcurve {

/// The exceptional configurations under which P(X) = Q(Y) has nonconstant
/// solutions over a genus-0 function field (equal degrees, Hypothesis I):
///   A  P(X) - Q(Y) has a linear factor;
///   B  one side has a single critical point of multiplicity p, the other
///      two, of multiplicities p - 1 and 1, the top ones sharing a value;
///   C  both sides have two critical points of multiplicities {p, 1}, the
///      top ones sharing a value;
///   D  both sides have three simple critical points with equal value sets;
///   E  both sides are quadratic.
enum class ExceptionalCase { A, B, C, D, E };

inline char to_char(ExceptionalCase c) { return static_cast<char>('A' + static_cast<int>(c)); }

inline ExceptionalCase case_from_char(char c) {
    if (c < 'A' || c > 'E') throw InvalidArgument(std::string("unknown case '") + c + "'");
    return static_cast<ExceptionalCase>(c - 'A');
}

/// Nonconstant solutions exist but none with coefficients in Q was built.
struct ExistenceOnly {
    ExceptionalCase which = ExceptionalCase::A;
    std::string reason;
    std::optional<LinearFactorCertificate> certificate;

    friend bool operator==(const ExistenceOnly&, const ExistenceOnly&) = default;
};

using WitnessResult = std::variant<SolutionPair, ExistenceOnly>;

namespace detail {

inline SolutionPair checked(SolutionPair sol) {
    sol.distinct = sol.f != sol.g;
    if (!sol.satisfied()) throw InvariantViolation("constructed witness does not satisfy P(f) = Q(g)");
    return sol;
}

inline WitnessResult linear_factor_witness(const Poly& p, const Poly& q,
                                           const std::optional<LinearFactorCertificate>& given) {
    auto cert = given ? given : detect_linear_factor(p, q);
    if (!cert) throw InvalidArgument("case A not satisfied: P(X) - Q(Y) has no linear factor");
    const auto scalings = cert->rational_scalings();
    if (!scalings.empty()) {
        const Rat& a = scalings.front();
        const Rat b = cert->shift_at(a);
        const RationalFunction t = RationalFunction::variable();
        return checked({p, q, t * RationalFunction(a) + RationalFunction(b), t, true});
    }
    return ExistenceOnly{ExceptionalCase::A,
                         "linear factor X - (aY + b) needs a root of " + format(cert->scaling, "a") +
                             ", which has no rational root",
                         cert};
}

}  // namespace detail

/// Builds an explicit solution over Q(t) for case A or E, or explains why
/// only existence over the algebraic closure is known.
inline WitnessResult witness(ExceptionalCase which, const Poly& p, const Poly& q,
                             const std::optional<LinearFactorCertificate>& certificate = std::nullopt) {
    switch (which) {
        case ExceptionalCase::A:
            return detail::linear_factor_witness(p, q, certificate);
        case ExceptionalCase::E: {
            if (p.degree() != 2 || q.degree() != 2) throw InvalidArgument("case E not satisfied: P and Q must be quadratic");
            // P = p2 (X - alpha)^2 + P(alpha), likewise Q; with u = f - alpha and
            // w = g - beta the equation becomes p2 u^2 - q2 w^2 = c.
            Rat p2 = p[2];
            Rat q2 = q[2];
            const Rat alpha = -p[1] / (2 * p2);
            const Rat beta = -q[1] / (2 * q2);
            Rat c = q(beta) - p(alpha);
            if (sgn(c) == 0) return detail::linear_factor_witness(p, q, certificate);
            if (sgn(p2) < 0 && sgn(q2) < 0) {
                p2 = -p2;
                q2 = -q2;
                c = -c;
            }
            auto s = exact_root(p2, 2);
            auto r = exact_root(q2, 2);
            if (!s || !r)
                return ExistenceOnly{ExceptionalCase::E,
                                     "conic " + to_string(p2) + "*u^2 - " + to_string(q2) + "*w^2 = " + to_string(c) +
                                         " is parametrized over a quadratic extension only",
                                     std::nullopt};
            // (s u + r w)(s u - r w) = c, with s u + r w = t.
            const RationalFunction t = RationalFunction::variable();
            const RationalFunction c_over_t = RationalFunction(c) / t;
            RationalFunction u = (t + c_over_t) / RationalFunction(Rat(2 * *s));
            RationalFunction w = (t - c_over_t) / RationalFunction(Rat(2 * *r));
            return detail::checked({p, q, u + RationalFunction(alpha), w + RationalFunction(beta), true});
        }
        default:
            throw InvalidArgument(std::string("explicit witnesses are built for cases A and E only, not ") +
                                  to_char(which));
    }
}

}  // namespace sepcurve
