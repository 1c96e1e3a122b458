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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "critical.hpp"
#include "errors.hpp"
#include "linear_factor.hpp"
#include "polynomial.hpp"
#include "witness.hpp"

namespace sepcurve {

/// P, Q and the genus of the function field. Construct through make(), which
/// validates the degrees and orients the pair so that deg P >= deg Q.
struct AnalysisInput {
    Poly p;
    Poly q;
    int genus = 0;
    bool swapped = false;  ///< p and q were exchanged to get deg p >= deg q

    static AnalysisInput make(Poly p, Poly q, int genus = 0) {
        if (p.degree() < 2 || q.degree() < 2) throw InvalidArgument("polynomial must be nonlinear");
        if (genus < 0) throw InvalidArgument("genus must be nonnegative");
        AnalysisInput in{std::move(p), std::move(q), genus, false};
        if (in.p.degree() < in.q.degree()) {
            std::swap(in.p, in.q);
            in.swapped = true;
        }
        return in;
    }

    /// Re-validates and re-orients (idempotent on make() output).
    AnalysisInput oriented() const {
        AnalysisInput out = make(p, q, genus);
        out.swapped = out.swapped != swapped;
        return out;
    }

    int n() const { return p.degree(); }
    int m() const { return q.degree(); }
};

enum class VerdictKind { ConstantsOnly, HeightBounded, NonconstantExists, Inconclusive };

inline std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::ConstantsOnly: return "ConstantsOnly";
        case VerdictKind::HeightBounded: return "HeightBounded";
        case VerdictKind::NonconstantExists: return "NonconstantExists";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

inline VerdictKind verdict_kind_from_string(const std::string& s) {
    for (auto k : {VerdictKind::ConstantsOnly, VerdictKind::HeightBounded, VerdictKind::NonconstantExists,
                   VerdictKind::Inconclusive})
        if (to_string(k) == s) return k;
    throw InvalidArgument("unknown verdict kind '" + s + "'");
}

/// Upper bounds on h(f) and h(g) for any solution.
struct HeightBounds {
    long long f = 0;
    long long g = 0;

    friend bool operator==(const HeightBounds&, const HeightBounds&) = default;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<HeightBounds> bounds;
    std::set<ExceptionalCase> cases;
    std::optional<WitnessResult> witness;
    std::vector<std::string> notes;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Exact criterion values, always in the orientation n = deg P >= m = deg Q.
struct CriteriaValues {
    int n = 0;
    int m = 0;
    Rat b0_sum;  ///< sum of p_i over critical points of P with unmatched value
    Rat b1_sum;  ///< sum of q_j over critical points of Q with unmatched value
    Rat s0;      ///< b0_sum - (m + n)/m
    Rat s1;      ///< b1_sum - 2m/n
    std::optional<Rat> s2;
    std::optional<MatchMatrix> match;

    friend bool operator==(const CriteriaValues&, const CriteriaValues&) = default;
};

struct CriterionOutcome {
    CriteriaValues values;
    Verdict verdict;
};

namespace detail {

inline long long floor_div(long long numerator, const Rat& s) { return floor(Rat(static_cast<long>(numerator)) / s).get_si(); }

/// Folds "s h(f) <= 2g - 2" into a verdict. `bounds_f` says whether s
/// multiplies h(f) (true) or h(g) (false); the other height follows from
/// n h(f) = m h(g).
class BoundCollector {
 public:
    BoundCollector(int genus, int n, int m) : genus_(genus), n_(n), m_(m) {}

    void add(const Rat& s, bool bounds_f, const std::string& label) {
        const long long top = 2LL * genus_ - 2;
        const Rat threshold(static_cast<long>(std::max(0LL, top)));
        if (s > threshold) {
            constant_ = true;
            notes_.push_back(label + " = " + to_string(s) + " exceeds max{0, 2g-2} = " + to_string(threshold));
            return;
        }
        if (sgn(s) <= 0) return;
        long long hf = 0;
        long long hg = 0;
        if (bounds_f) {
            hf = floor_div(top, s);
            hg = (hf * n_) / m_;
        } else {
            hg = floor_div(top, s);
            hf = (hg * m_) / n_;
        }
        if (!bounds_) {
            bounds_ = HeightBounds{hf, hg};
        } else {
            bounds_->f = std::min(bounds_->f, hf);
            bounds_->g = std::min(bounds_->g, hg);
        }
        notes_.push_back(label + " = " + to_string(s) + " > 0 bounds the heights");
    }

    Verdict verdict() const {
        Verdict v;
        v.notes = notes_;
        if (constant_) {
            v.kind = VerdictKind::ConstantsOnly;
        } else if (bounds_) {
            v.kind = VerdictKind::HeightBounded;
            v.bounds = bounds_;
        }
        return v;
    }

 private:
    int genus_;
    int n_;
    int m_;
    bool constant_ = false;
    std::optional<HeightBounds> bounds_;
    std::vector<std::string> notes_;
};

}  // namespace detail

/// Criterion from the critical values of each side that the other side does
/// not share:
///   (b0_sum - (m+n)/m) h(f) <= 2g - 2,   (b1_sum - 2m/n) h(g) <= 2g - 2,
/// for any two distinct nonconstant solutions, together with n h(f) = m h(g).
inline CriterionOutcome unmatched_value_criterion(const AnalysisInput& raw) {
    const AnalysisInput in = raw.oriented();
    const int n = in.n();
    const int m = in.m();
    const CriticalProfile pp = critical_profile(in.p);
    const CriticalProfile qp = critical_profile(in.q);

    CriterionOutcome out;
    auto& v = out.values;
    v.n = n;
    v.m = m;
    v.b0_sum = unmatched_weight(pp, qp);
    v.b1_sum = unmatched_weight(qp, pp);
    v.s0 = v.b0_sum - make_rat(m + n, m);
    v.s1 = v.b1_sum - make_rat(2 * m, n);

    detail::BoundCollector bounds(in.genus, n, m);
    bounds.add(v.s0, true, "s0");
    bounds.add(v.s1, false, "s1");
    out.verdict = bounds.verdict();
    out.verdict.notes.push_back("every solution satisfies " + std::to_string(n) + "*h(f) = " + std::to_string(m) +
                                "*h(g)");
    return out;
}

/// s2 = sum over matched pairs with e > d of (e - (n/m) d)
///      + sum of e over unmatched critical points of P - (m+n)/m.
inline Rat matched_pair_value(const CriticalProfile& pp, const MatchMatrix& match, int n, int m) {
    Rat s2 = -make_rat(m + n, m);
    for (const auto& [key, count] : match.counts) {
        const auto [e, d] = key;
        if (e > d) s2 += Rat(count) * (Rat(e) - make_rat(n, m) * d);
    }
    for (const auto& c : pp.classes) s2 += Rat(c.multiplicity) * (c.points.degree() - match.matched_in_p_class(c.multiplicity));
    return s2;
}

/// Criterion from the matched critical values under Hypothesis I on both
/// sides: s2 h(f) <= 2g - 2.
inline CriterionOutcome matched_pair_criterion(const AnalysisInput& raw) {
    const AnalysisInput in = raw.oriented();
    const int n = in.n();
    const int m = in.m();
    const CriticalProfile pp = critical_profile(in.p);
    const CriticalProfile qp = critical_profile(in.q);
    if (!pp.injective_on_critical_points)
        throw HypothesisNotApplicable("matched-pair criterion inapplicable: " + format(in.p) +
                                      " violates Hypothesis I");
    if (!qp.injective_on_critical_points)
        throw HypothesisNotApplicable("matched-pair criterion inapplicable: " + format(in.q) +
                                      " violates Hypothesis I");

    CriterionOutcome out;
    auto& v = out.values;
    v.n = n;
    v.m = m;
    v.b0_sum = unmatched_weight(pp, qp);
    v.b1_sum = unmatched_weight(qp, pp);
    v.s0 = v.b0_sum - make_rat(m + n, m);
    v.s1 = v.b1_sum - make_rat(2 * m, n);
    v.match = match_matrix(pp, qp);
    v.s2 = matched_pair_value(pp, *v.match, n, m);

    detail::BoundCollector bounds(in.genus, n, m);
    bounds.add(*v.s2, true, "s2");
    out.verdict = bounds.verdict();
    return out;
}

namespace detail {

inline bool top_pair_matched(const MatchMatrix& match, int e, int d) { return match.count(e, d) >= 1; }

inline void attach_witness(Verdict& verdict, const Poly& p, const Poly& q,
                           const std::optional<LinearFactorCertificate>& cert) {
    if (verdict.cases.contains(ExceptionalCase::E)) {
        verdict.witness = witness(ExceptionalCase::E, p, q, cert);
        if (std::holds_alternative<SolutionPair>(*verdict.witness) || !verdict.cases.contains(ExceptionalCase::A))
            return;
    }
    if (verdict.cases.contains(ExceptionalCase::A)) {
        verdict.witness = witness(ExceptionalCase::A, p, q, cert);
        return;
    }
    if (!verdict.witness) {
        const ExceptionalCase first = *verdict.cases.begin();
        verdict.witness = ExistenceOnly{first,
                                        std::string("curve component of genus 0 exists for case ") + to_char(first) +
                                            "; no explicit parametrization is constructed",
                                        std::nullopt};
    }
}

}  // namespace detail

/// Complete answer for genus 0, deg P = deg Q and Hypothesis I on both
/// sides: nonconstant solutions exist iff one of the cases A-E holds.
inline Verdict classify_equal_degree(const AnalysisInput& raw) {
    const AnalysisInput in = raw.oriented();
    if (in.genus != 0) throw HypothesisNotApplicable("equal-degree classification requires genus 0; use the height criteria");
    if (in.n() != in.m()) throw HypothesisNotApplicable("equal-degree classification requires n = m; use the height criteria");
    const CriticalProfile pp = critical_profile(in.p);
    const CriticalProfile qp = critical_profile(in.q);
    if (!pp.injective_on_critical_points || !qp.injective_on_critical_points)
        throw HypothesisNotApplicable("equal-degree classification requires Hypothesis I for P and Q; use the height criteria");

    const MatchMatrix match = match_matrix(pp, qp);
    const std::vector<int> mp = pp.multiplicities();
    const std::vector<int> mq = qp.multiplicities();
    const auto lp = mp.size();
    const auto lq = mq.size();

    Verdict v;
    const auto cert = detect_linear_factor(in.p, in.q);
    if (cert) v.cases.insert(ExceptionalCase::A);

    // B, in either orientation: one critical point of multiplicity k against
    // two of multiplicities k - 1 and 1, the high ones sharing a value.
    if (lp == 1 && lq == 2 && mp[0] >= 2 && mq == std::vector<int>{mp[0] - 1, 1} &&
        detail::top_pair_matched(match, mp[0], mp[0] - 1))
        v.cases.insert(ExceptionalCase::B);
    if (lq == 1 && lp == 2 && mq[0] >= 2 && mp == std::vector<int>{mq[0] - 1, 1} &&
        detail::top_pair_matched(match, mq[0] - 1, mq[0]))
        v.cases.insert(ExceptionalCase::B);
    if (v.cases.contains(ExceptionalCase::B) && std::max(mp[0], mq[0]) == 2)
        v.notes.emplace_back("case B with multiplicity 2: the two simple critical points are not ordered; one shared value decides");

    if (lp == 2 && lq == 2 && mp == mq && mp[1] == 1) {
        const int top = mp[0];
        if (top > 1 && detail::top_pair_matched(match, top, top)) v.cases.insert(ExceptionalCase::C);
        if (top == 1 && match.l0 >= 1) {
            v.cases.insert(ExceptionalCase::C);
            v.notes.emplace_back("case C with four simple critical points decided by at least one shared value");
        }
    }

    if (lp == 3 && lq == 3 && mp == std::vector<int>{1, 1, 1} && mq == mp && match.count(1, 1) == 3)
        v.cases.insert(ExceptionalCase::D);

    if (in.n() == 2) v.cases.insert(ExceptionalCase::E);

    if (v.cases.empty()) {
        v.kind = VerdictKind::ConstantsOnly;
        v.notes.emplace_back("none of the cases A-E holds");
        return v;
    }
    v.kind = VerdictKind::NonconstantExists;
    detail::attach_witness(v, in.p, in.q, cert);
    return v;
}

}  // namespace sepcurve
