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

#include <map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

namespace sepcurve {

/// The critical points of P sharing one multiplicity e in P'.
struct CriticalClass {
    int multiplicity = 0;  ///< e
    Poly points;           ///< S_e: monic squarefree, its roots are the critical points
    Poly values;           ///< T_e: monic, its roots are P at those points

    friend bool operator==(const CriticalClass&, const CriticalClass&) = default;
};

/// Distinct roots of P' grouped by multiplicity, with their critical values
/// encoded as polynomials over Q. Individual algebraic roots are never formed.
struct CriticalProfile {
    int source_degree = 0;
    std::vector<CriticalClass> classes;  ///< ascending multiplicity
    bool injective_on_critical_points = false;  ///< Hypothesis I

    /// Number l of distinct critical points.
    int distinct_points() const {
        int l = 0;
        for (const auto& c : classes) l += c.points.degree();
        return l;
    }

    /// Multiplicities of the individual critical points, non-increasing.
    std::vector<int> multiplicities() const {
        std::vector<int> out;
        for (auto it = classes.rbegin(); it != classes.rend(); ++it)
            out.insert(out.end(), static_cast<std::size_t>(it->points.degree()), it->multiplicity);
        return out;
    }

    const CriticalClass* find_class(int multiplicity) const {
        for (const auto& c : classes)
            if (c.multiplicity == multiplicity) return &c;
        return nullptr;
    }

    /// Product of all T_e: roots are the critical values, one per critical point.
    Poly all_values() const {
        Poly out{Rat(1)};
        for (const auto& c : classes) out *= c.values;
        return out;
    }

    friend bool operator==(const CriticalProfile&, const CriticalProfile&) = default;
};

inline CriticalProfile critical_profile(const Poly& p) {
    if (p.degree() < 2) throw InvalidArgument("polynomial must be nonlinear");
    CriticalProfile profile;
    profile.source_degree = p.degree();
    for (const auto& [e, s] : yun_decompose(derivative(p)).factors)
        profile.classes.push_back({e, s, value_polynomial(s, p)});
    profile.injective_on_critical_points = is_squarefree(profile.all_values());
    return profile;
}

/// True iff P takes pairwise distinct values at its distinct critical points.
inline bool check_hypothesis_I(const CriticalProfile& profile) { return is_squarefree(profile.all_values()); }

/// Number of critical-value coincidences between the classes of P and of Q.
struct MatchMatrix {
    std::map<std::pair<int, int>, int> counts;  ///< (e, d) -> N_{e,d}; zero entries omitted
    int l0 = 0;

    int count(int e, int d) const {
        auto it = counts.find({e, d});
        return it == counts.end() ? 0 : it->second;
    }

    /// sum_d N_{e,d}: matched critical points of P in class e.
    int matched_in_p_class(int e) const {
        int total = 0;
        for (const auto& [key, n] : counts)
            if (key.first == e) total += n;
        return total;
    }

    friend bool operator==(const MatchMatrix&, const MatchMatrix&) = default;
};

/// Under Hypothesis I on both sides, each critical point of P matches at
/// most one of Q, so N_{e,d} is the degree of gcd(T_{P,e}, T_{Q,d}).
inline MatchMatrix match_matrix(const CriticalProfile& p, const CriticalProfile& q) {
    if (!p.injective_on_critical_points || !q.injective_on_critical_points)
        throw HypothesisNotApplicable("match matrix requires Hypothesis I");
    MatchMatrix out;
    for (const auto& pc : p.classes) {
        for (const auto& qc : q.classes) {
            int n = poly_gcd(pc.values, qc.values).degree();
            if (n > 0) out.counts[{pc.multiplicity, qc.multiplicity}] = n;
            out.l0 += n;
        }
    }
    return out;
}

/// Sum of the multiplicities e over the critical points of P whose critical
/// value is not a critical value of Q. Needs no hypothesis.
inline Rat unmatched_weight(const CriticalProfile& p, const CriticalProfile& q) {
    Poly w = squarefree_part(q.all_values());
    long total = 0;
    for (const auto& c : p.classes) total += static_cast<long>(c.multiplicity) * coprime_part(c.values, w).degree();
    return Rat(total);
}

}  // namespace sepcurve
