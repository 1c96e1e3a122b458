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
#include <utility>
#include <vector>

#include "critical.hpp"
#include "criteria.hpp"
#include "errors.hpp"

namespace sepcurve {

/// Everything analyze() derives for one pair. Criterion values are in the
/// orientation n >= m; profiles, height bounds and witnesses refer to the
/// P and Q exactly as given.
struct Report {
    Poly p;
    Poly q;
    int genus = 0;
    bool swapped = false;
    int n = 0;
    int m = 0;

    CriticalProfile profile_p;
    CriticalProfile profile_q;
    CriteriaValues values;

    Verdict unmatched_values;

    std::optional<Verdict> matched_pairs;
    std::string matched_pairs_gate;  ///< why matched_pairs is absent
    /// With n = m either side may play P; the mirrored evaluation is kept.
    std::optional<Rat> s2_mirror;
    std::optional<Verdict> matched_pairs_mirror;

    std::optional<Verdict> equal_degree;
    std::string equal_degree_gate;

    Verdict combined;
    std::string decided_by;

    friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

inline void swap_roles(Verdict& v) {
    if (v.bounds) std::swap(v.bounds->f, v.bounds->g);
    if (v.witness) {
        if (auto* sol = std::get_if<SolutionPair>(&*v.witness)) {
            std::swap(sol->p, sol->q);
            std::swap(sol->f, sol->g);
        }
    }
}

inline void merge_bounds(std::optional<HeightBounds>& acc, const Verdict& v) {
    if (v.kind != VerdictKind::HeightBounded || !v.bounds) return;
    if (!acc) {
        acc = v.bounds;
        return;
    }
    acc->f = std::min(acc->f, v.bounds->f);
    acc->g = std::min(acc->g, v.bounds->g);
}

}  // namespace detail

inline Report analyze(const Poly& p, const Poly& q, int genus = 0) {
    const AnalysisInput in = AnalysisInput::make(p, q, genus);
    Report r;
    r.p = p;
    r.q = q;
    r.genus = genus;
    r.swapped = in.swapped;
    r.n = in.n();
    r.m = in.m();
    r.profile_p = critical_profile(p);
    r.profile_q = critical_profile(q);

    CriterionOutcome first = unmatched_value_criterion(in);
    r.values = first.values;
    r.unmatched_values = first.verdict;

    try {
        CriterionOutcome second = matched_pair_criterion(in);
        r.values.s2 = second.values.s2;
        r.values.match = second.values.match;
        r.matched_pairs = second.verdict;
        if (r.n == r.m) {
            AnalysisInput mirror = in;
            std::swap(mirror.p, mirror.q);
            CriterionOutcome third = matched_pair_criterion(mirror);
            r.s2_mirror = third.values.s2;
            r.matched_pairs_mirror = third.verdict;
            detail::swap_roles(*r.matched_pairs_mirror);
        }
    } catch (const HypothesisNotApplicable& e) {
        r.matched_pairs_gate = e.what();
    }

    try {
        r.equal_degree = classify_equal_degree(in);
    } catch (const HypothesisNotApplicable& e) {
        r.equal_degree_gate = e.what();
    }

    const std::vector<std::pair<const Verdict*, std::string>> criteria{
        {&r.unmatched_values, "unmatched critical values"},
        {r.matched_pairs ? &*r.matched_pairs : nullptr, "matched critical values"},
        {r.matched_pairs_mirror ? &*r.matched_pairs_mirror : nullptr, "matched critical values (mirrored)"},
    };

    if (r.equal_degree) {
        r.combined = *r.equal_degree;
        r.decided_by = "equal-degree classification";
        if (r.combined.kind == VerdictKind::NonconstantExists) {
            for (const auto& [v, name] : criteria)
                if (v && v->kind == VerdictKind::ConstantsOnly)
                    throw InvariantViolation("classification found solutions but the " + name +
                                             " criterion excludes them");
        }
    } else {
        std::optional<HeightBounds> bounds;
        std::vector<std::string> bounded_by;
        for (const auto& [v, name] : criteria) {
            if (!v) continue;
            if (v->kind == VerdictKind::ConstantsOnly && r.decided_by.empty()) {
                r.combined = *v;
                r.decided_by = name;
            }
            if (v->kind == VerdictKind::HeightBounded) {
                detail::merge_bounds(bounds, *v);
                bounded_by.push_back(name);
            }
        }
        if (r.decided_by.empty() && bounds) {
            r.combined.kind = VerdictKind::HeightBounded;
            r.combined.bounds = bounds;
            for (const auto& name : bounded_by) r.decided_by += (r.decided_by.empty() ? "" : ", ") + name;
        }
        if (r.decided_by.empty()) {
            r.combined.kind = VerdictKind::Inconclusive;
            r.decided_by = "none";
        }
    }

    if (r.swapped) {
        detail::swap_roles(r.unmatched_values);
        if (r.matched_pairs) detail::swap_roles(*r.matched_pairs);
        if (r.matched_pairs_mirror) detail::swap_roles(*r.matched_pairs_mirror);
        if (r.equal_degree) detail::swap_roles(*r.equal_degree);
        detail::swap_roles(r.combined);
    }
    return r;
}

}  // namespace sepcurve
