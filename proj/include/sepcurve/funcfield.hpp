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
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "critical.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"

namespace sepcurve {

/// A closed point of the projective t-line over Q: either the point at
/// infinity or a monic squarefree polynomial standing for its roots.
///
/// A squarefree generator that is not irreducible still gives well-defined
/// valuations as long as it comes from a coprime basis of the functions at
/// hand (see places_for), because then every root carries the same orders.
class Place {
 public:
    Place() = default;  ///< the point at infinity

    static Place infinity() { return Place(); }

    static Place finite(const Poly& generator) {
        if (generator.degree() < 1) throw InvalidArgument("place generator must be nonconstant");
        if (!is_squarefree(generator)) throw InvalidArgument("place generator must be squarefree");
        Place p;
        p.generator_ = monic(generator);
        p.infinite_ = false;
        return p;
    }

    bool is_infinity() const noexcept { return infinite_; }
    const Poly& generator() const noexcept { return generator_; }

    /// Number of geometric points carried by the place.
    int degree() const noexcept { return infinite_ ? 1 : generator_.degree(); }

    friend bool operator==(const Place&, const Place&) = default;

 private:
    Poly generator_;
    bool infinite_ = true;
};

inline std::string format(const Place& place, const std::string& var = "t") {
    return place.is_infinity() ? "inf" : format(place.generator(), var);
}

namespace detail {

inline int multiplicity_of(Poly p, const Poly& pi) {
    int k = 0;
    for (;;) {
        auto [quotient, remainder] = divmod(p, pi);
        if (!remainder.is_zero()) return k;
        p = std::move(quotient);
        ++k;
    }
}

}  // namespace detail

/// Normalized order v(f) at the place; negative at poles.
inline int valuation(const RationalFunction& f, const Place& place) {
    if (f.is_zero()) throw InvalidArgument("valuation of the zero function is undefined");
    if (place.is_infinity()) return f.denominator().degree() - f.numerator().degree();
    return detail::multiplicity_of(f.numerator(), place.generator()) -
           detail::multiplicity_of(f.denominator(), place.generator());
}

/// Pairwise coprime monic squarefree polynomials such that every input is,
/// up to a constant, a product of powers of them with one exponent per
/// element. Built from Yun factors so that each element's roots share their
/// multiplicities in every input.
inline std::vector<Poly> coprime_basis(const std::vector<Poly>& inputs) {
    std::vector<Poly> basis;
    auto insert = [&basis](Poly s) {
        std::vector<Poly> next;
        for (auto& b : basis) {
            if (s.degree() < 1) {
                next.push_back(std::move(b));
                continue;
            }
            Poly g = poly_gcd(s, b);
            if (g.degree() < 1) {
                next.push_back(std::move(b));
                continue;
            }
            Poly rest = exact_quotient(b, g);
            next.push_back(g);
            if (rest.degree() >= 1) next.push_back(monic(rest));
            s = exact_quotient(s, g);
        }
        if (s.degree() >= 1) next.push_back(monic(s));
        basis = std::move(next);
    };
    for (const auto& p : inputs) {
        if (p.degree() < 1) continue;
        for (const auto& factor : yun_decompose(p).factors) insert(factor.factor);
    }
    return basis;
}

/// Every place where some of the given functions has a zero or a pole,
/// followed by infinity. Places outside this list have valuation 0 for all
/// of them.
inline std::vector<Place> places_for(const std::vector<RationalFunction>& functions) {
    std::vector<Poly> polys;
    for (const auto& f : functions) {
        polys.push_back(f.numerator());
        polys.push_back(f.denominator());
    }
    std::vector<Place> out;
    for (const auto& b : coprime_basis(polys)) out.push_back(Place::finite(b));
    out.push_back(Place::infinity());
    return out;
}

/// Number of poles with multiplicity: max(deg numerator, deg denominator).
inline long long height(const RationalFunction& f) {
    if (f.is_zero()) return 0;
    return std::max(f.numerator().degree(), f.denominator().degree());
}

/// Height of [f : g] in the projective line over Q(t): write it as [A : B]
/// with coprime polynomials and take max(deg A, deg B).
inline long long pair_height(const RationalFunction& f, const RationalFunction& g) {
    if (f.is_zero() && g.is_zero()) throw InvalidArgument("pair height of (0, 0) is undefined");
    if (f.is_zero() || g.is_zero()) return 0;
    Poly a = f.numerator() * g.denominator();
    Poly b = g.numerator() * f.denominator();
    Poly common = poly_gcd(a, b);
    a = exact_quotient(a, common);
    b = exact_quotient(b, common);
    return std::max(a.degree(), b.degree());
}

/// h(f) as the defining sum of -min(0, v) over places, weighted by degree.
inline long long height_by_places(const RationalFunction& f) {
    if (f.is_zero()) return 0;
    long long total = 0;
    for (const auto& place : places_for({f})) total -= place.degree() * std::min(0, valuation(f, place));
    return total;
}

/// h(f, g) as the defining sum of -min(v(f), v(g)) over places.
inline long long pair_height_by_places(const RationalFunction& f, const RationalFunction& g) {
    if (f.is_zero() && g.is_zero()) throw InvalidArgument("pair height of (0, 0) is undefined");
    if (f.is_zero() || g.is_zero()) return 0;
    long long total = 0;
    for (const auto& place : places_for({f, g}))
        total -= place.degree() * std::min(valuation(f, place), valuation(g, place));
    return total;
}

/// Order of df/dt_p, the derivative with respect to a local uniformizer.
/// At a finite squarefree place t - root is a uniformizer, so this is
/// v(df/dt); at infinity the uniformizer is 1/t and the order drops by 2.
inline int derivative_place_valuation(const RationalFunction& f, const Place& place) {
    if (f.is_constant()) throw InvalidArgument("derivative valuation of a constant function");
    int v = valuation(derivative(f), place);
    return place.is_infinity() ? v - 2 : v;
}

/// P(f) = Q(g) in Q(t).
struct SolutionPair {
    Poly p;
    Poly q;
    RationalFunction f;
    RationalFunction g;
    bool distinct = true;

    bool satisfied() const { return apply(p, f) == apply(q, g); }

    friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

/// P = R(x^a), Q = R(y^b), f = M^b, g = M^a, so P(f) = R(M^(ab)) = Q(g).
inline SolutionPair generate_test_solution(const Poly& r, int a, int b, const RationalFunction& m) {
    if (r.degree() < 1) throw InvalidArgument("generator polynomial must be nonconstant");
    if (m.is_constant()) throw InvalidArgument("generator function must be nonconstant");
    if (a < 1 || b < 1) throw InvalidArgument("exponents must be positive");
    SolutionPair out;
    out.p = compose(r, Poly::monomial(Rat(1), static_cast<std::size_t>(a)));
    out.q = compose(r, Poly::monomial(Rat(1), static_cast<std::size_t>(b)));
    out.f = pow(m, static_cast<unsigned>(b));
    out.g = pow(m, static_cast<unsigned>(a));
    out.distinct = out.f != out.g;
    return out;
}

/// One coincidence f(pt) = alpha, g(pt) = beta of critical points alpha of P
/// (multiplicity e) and beta of Q (multiplicity d), checked for
/// (e + 1) v(f - alpha) = (d + 1) v(g - beta).
struct LocalMultiplicityCheck {
    Place place;
    int p_multiplicity = 0;
    int q_multiplicity = 0;
    int order_f = 0;
    int order_g = 0;
    bool holds = false;
};

/// Exact values of the height identities and inequalities for one solution,
/// computed in the orientation deg P >= deg Q at genus 0.
struct IdentityReport {
    bool swapped = false;
    bool distinct = true;
    int n = 0;
    int m = 0;
    long long height_f = 0;
    long long height_g = 0;

    /// n h(f) = m h(g)
    bool degree_height_identity = false;

    /// h(P'(f), Q'(g)) + sum min(v0(d f), v0(d g)) <= (m + n)/m h(f) - 2
    long long derivative_pair_height = 0;
    long long ramification_surplus = 0;
    Rat bound_lhs;
    Rat bound_rhs;
    bool derivative_bound = false;

    /// -sum over poles of f of min(v(P'(f)), v(Q'(g))) = (n - 1) h(f)
    long long pole_order_sum = 0;
    long long pole_order_expected = 0;
    bool pole_identity = false;

    std::vector<LocalMultiplicityCheck> local_checks;
    bool local_multiplicities = true;

    int scaling_samples = 0;
    bool scaling_invariance = false;

    std::vector<std::string> notes;

    bool all_hold() const {
        return degree_height_identity && derivative_bound && pole_identity && local_multiplicities &&
               scaling_invariance;
    }
};

/// Fixed multipliers used for the scaling-invariance check.
inline std::vector<RationalFunction> scaling_samples() {
    const RationalFunction t = RationalFunction::variable();
    const RationalFunction one(Rat(1));
    return {
        t,
        RationalFunction(Rat(7)),
        t + RationalFunction(Rat(1)),
        one / (t * t + one),
        (t * RationalFunction(Rat(2)) - RationalFunction(Rat(3))) / (t + RationalFunction(Rat(5))),
        pow(t, 3) * RationalFunction(make_rat(-1, 3)) + t,
    };
}

inline IdentityReport verify_solution_identities(const SolutionPair& sol) {
    if (sol.f.is_constant() || sol.g.is_constant())
        throw InvalidArgument("identity preconditions violated: f and g must be nonconstant");
    if (sol.p.degree() < 1 || sol.q.degree() < 1)
        throw InvalidArgument("identity preconditions violated: P and Q must be nonconstant");
    if (!sol.satisfied()) throw InvalidArgument("identity preconditions violated: P(f) != Q(g)");

    IdentityReport report;
    Poly p = sol.p;
    Poly q = sol.q;
    RationalFunction f = sol.f;
    RationalFunction g = sol.g;
    if (p.degree() < q.degree()) {
        std::swap(p, q);
        std::swap(f, g);
        report.swapped = true;
    }
    report.distinct = f != g;
    if (!report.distinct) report.notes.emplace_back("distinctness hypothesis not met");

    const int n = p.degree();
    const int m = q.degree();
    report.n = n;
    report.m = m;
    report.height_f = height(f);
    report.height_g = height(g);
    report.degree_height_identity = n * report.height_f == m * report.height_g;

    const RationalFunction df = derivative(f);
    const RationalFunction dg = derivative(g);
    const RationalFunction pf = apply(derivative(p), f);
    const RationalFunction qg = apply(derivative(q), g);

    report.derivative_pair_height = pair_height(pf, qg);
    for (const auto& place : places_for({df, dg})) {
        int vf = valuation(df, place);
        int vg = valuation(dg, place);
        if (place.is_infinity()) {
            vf -= 2;
            vg -= 2;
        }
        report.ramification_surplus += place.degree() * std::min(std::max(0, vf), std::max(0, vg));
    }
    report.bound_lhs = Rat(static_cast<long>(report.derivative_pair_height + report.ramification_surplus));
    report.bound_rhs = make_rat(m + n, m) * Rat(static_cast<long>(report.height_f)) - 2;
    report.derivative_bound = report.bound_lhs <= report.bound_rhs;

    for (const auto& place : places_for({f, pf, qg})) {
        if (valuation(f, place) >= 0) continue;
        report.pole_order_sum -= place.degree() * std::min(valuation(pf, place), valuation(qg, place));
    }
    report.pole_order_expected = (n - 1) * report.height_f;
    report.pole_identity = report.pole_order_sum == report.pole_order_expected;

    if (n >= 2 && m >= 2) {
        const CriticalProfile pp = critical_profile(p);
        const CriticalProfile qp = critical_profile(q);
        for (const auto& pc : pp.classes) {
            const RationalFunction at_f = apply(pc.points, f);
            for (const auto& qc : qp.classes) {
                const RationalFunction at_g = apply(qc.points, g);
                for (const auto& place : places_for({at_f, at_g})) {
                    int of = valuation(at_f, place);
                    int og = valuation(at_g, place);
                    if (of <= 0 || og <= 0) continue;
                    bool holds = (pc.multiplicity + 1) * of == (qc.multiplicity + 1) * og;
                    report.local_checks.push_back({place, pc.multiplicity, qc.multiplicity, of, og, holds});
                    report.local_multiplicities = report.local_multiplicities && holds;
                }
            }
        }
    }

    const long long base = pair_height(f, g);
    report.scaling_invariance = true;
    for (const auto& eta : scaling_samples()) {
        ++report.scaling_samples;
        if (pair_height(eta * f, eta * g) != base) report.scaling_invariance = false;
    }
    return report;
}

}  // namespace sepcurve
