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
#include <vector>

#include <json.hpp>

#include "analysis.hpp"
#include "funcfield.hpp"
#include "parse.hpp"
#include "witness.hpp"

// JSON forms of reports. Rationals are "a/b" strings, polynomials ascending
// coefficient arrays of such strings; integer counts and degrees stay numbers.
// Objects use sorted keys, so equal values serialize to equal bytes.

namespace sepcurve {

using Json = nlohmann::json;

inline Json rat_json(const Rat& r) { return to_string(r); }

inline Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(j.dump(), 10));
    if (!j.is_string()) throw InvalidArgument("expected a rational string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

inline Json poly_json(const Poly& p) {
    Json out = Json::array();
    for (const Rat& c : p.coefficients()) out.push_back(rat_json(c));
    return out;
}

inline Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("expected a coefficient list, got " + j.dump());
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_json(c));
    return Poly(std::move(coeffs));
}

/// A polynomial given either as expression text or as an ascending list.
inline Poly poly_from_input(const Json& j) {
    if (j.is_string()) return parse_polynomial(j.get<std::string>());
    return poly_from_json(j);
}

inline Json function_json(const RationalFunction& f) {
    return {{"numerator", poly_json(f.numerator())},
            {"denominator", poly_json(f.denominator())},
            {"text", format(f, "t")}};
}

inline RationalFunction function_from_json(const Json& j) {
    if (j.is_string()) return parse_rational_function(j.get<std::string>());
    return {poly_from_json(j.at("numerator")), poly_from_json(j.at("denominator"))};
}

template <class T, class F>
Json optional_json(const std::optional<T>& value, F&& convert) {
    return value ? convert(*value) : Json(nullptr);
}

template <class T, class F>
std::optional<T> optional_from_json(const Json& j, F&& convert) {
    if (j.is_null()) return std::nullopt;
    return convert(j);
}

// --- critical values ----------------------------------------------------

inline void to_json(Json& j, const CriticalClass& c) {
    j = {{"multiplicity", c.multiplicity}, {"points", poly_json(c.points)}, {"values", poly_json(c.values)}};
}

inline void from_json(const Json& j, CriticalClass& c) {
    c.multiplicity = j.at("multiplicity").get<int>();
    c.points = poly_from_json(j.at("points"));
    c.values = poly_from_json(j.at("values"));
}

inline void to_json(Json& j, const CriticalProfile& p) {
    j = {{"degree", p.source_degree},
         {"distinct_critical_points", p.distinct_points()},
         {"hypothesis_I", p.injective_on_critical_points},
         {"classes", p.classes}};
}

inline void from_json(const Json& j, CriticalProfile& p) {
    p.source_degree = j.at("degree").get<int>();
    p.injective_on_critical_points = j.at("hypothesis_I").get<bool>();
    p.classes = j.at("classes").get<std::vector<CriticalClass>>();
}

inline void to_json(Json& j, const MatchMatrix& m) {
    Json entries = Json::array();
    for (const auto& [key, count] : m.counts) entries.push_back({{"e", key.first}, {"d", key.second}, {"count", count}});
    j = {{"entries", entries}, {"l0", m.l0}};
}

inline void from_json(const Json& j, MatchMatrix& m) {
    m.counts.clear();
    for (const auto& e : j.at("entries"))
        m.counts[{e.at("e").get<int>(), e.at("d").get<int>()}] = e.at("count").get<int>();
    m.l0 = j.at("l0").get<int>();
}

// --- witnesses ----------------------------------------------------------

inline void to_json(Json& j, const SolutionPair& s) {
    j = {{"P", poly_json(s.p)}, {"Q", poly_json(s.q)}, {"f", function_json(s.f)}, {"g", function_json(s.g)},
         {"distinct", s.distinct}};
}

inline void from_json(const Json& j, SolutionPair& s) {
    s.p = poly_from_json(j.at("P"));
    s.q = poly_from_json(j.at("Q"));
    s.f = function_from_json(j.at("f"));
    s.g = function_from_json(j.at("g"));
    s.distinct = j.at("distinct").get<bool>();
}

inline void to_json(Json& j, const LinearFactorCertificate& c) {
    Json roots = Json::array();
    for (const Rat& a : c.rational_scalings()) roots.push_back(rat_json(a));
    j = {{"degree", c.degree},
         {"leading_ratio", rat_json(c.leading_ratio)},
         {"scaling", poly_json(c.scaling)},
         {"shift", poly_json(c.shift)},
         {"rational_scalings", roots}};
}

inline void from_json(const Json& j, LinearFactorCertificate& c) {
    c.degree = j.at("degree").get<int>();
    c.leading_ratio = rat_from_json(j.at("leading_ratio"));
    c.scaling = poly_from_json(j.at("scaling"));
    c.shift = poly_from_json(j.at("shift"));
}

inline Json witness_json(const WitnessResult& w) {
    if (const auto* sol = std::get_if<SolutionPair>(&w)) {
        Json j = *sol;
        j["type"] = "solution";
        return j;
    }
    const auto& e = std::get<ExistenceOnly>(w);
    return {{"type", "existence_only"},
            {"case", std::string(1, to_char(e.which))},
            {"reason", e.reason},
            {"certificate", optional_json(e.certificate, [](const auto& c) { return Json(c); })}};
}

inline WitnessResult witness_from_json(const Json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "solution") return j.get<SolutionPair>();
    if (type != "existence_only") throw InvalidArgument("unknown witness type '" + type + "'");
    const auto which = j.at("case").get<std::string>();
    if (which.size() != 1) throw InvalidArgument("malformed case '" + which + "'");
    return ExistenceOnly{case_from_char(which[0]), j.at("reason").get<std::string>(),
                         optional_from_json<LinearFactorCertificate>(
                             j.at("certificate"), [](const Json& c) { return c.get<LinearFactorCertificate>(); })};
}

// --- verdicts -----------------------------------------------------------

inline void to_json(Json& j, const Verdict& v) {
    Json cases = Json::array();
    for (auto c : v.cases) cases.push_back(std::string(1, to_char(c)));
    j = {{"kind", to_string(v.kind)},
         {"bounds", optional_json(v.bounds, [](const HeightBounds& b) { return Json{{"h_f", b.f}, {"h_g", b.g}}; })},
         {"cases", cases},
         {"witness", optional_json(v.witness, witness_json)},
         {"notes", v.notes}};
}

inline void from_json(const Json& j, Verdict& v) {
    v.kind = verdict_kind_from_string(j.at("kind").get<std::string>());
    v.bounds = optional_from_json<HeightBounds>(j.at("bounds"), [](const Json& b) {
        return HeightBounds{b.at("h_f").get<long long>(), b.at("h_g").get<long long>()};
    });
    v.cases.clear();
    for (const auto& c : j.at("cases")) {
        const auto s = c.get<std::string>();
        if (s.size() != 1) throw InvalidArgument("malformed case '" + s + "'");
        v.cases.insert(case_from_char(s[0]));
    }
    v.witness = optional_from_json<WitnessResult>(j.at("witness"), witness_from_json);
    v.notes = j.at("notes").get<std::vector<std::string>>();
}

inline void to_json(Json& j, const CriteriaValues& v) {
    j = {{"n", v.n},
         {"m", v.m},
         {"b0_sum", rat_json(v.b0_sum)},
         {"b1_sum", rat_json(v.b1_sum)},
         {"s0", rat_json(v.s0)},
         {"s1", rat_json(v.s1)},
         {"s2", optional_json(v.s2, rat_json)},
         {"match", optional_json(v.match, [](const MatchMatrix& m) { return Json(m); })}};
}

inline void from_json(const Json& j, CriteriaValues& v) {
    v.n = j.at("n").get<int>();
    v.m = j.at("m").get<int>();
    v.b0_sum = rat_from_json(j.at("b0_sum"));
    v.b1_sum = rat_from_json(j.at("b1_sum"));
    v.s0 = rat_from_json(j.at("s0"));
    v.s1 = rat_from_json(j.at("s1"));
    v.s2 = optional_from_json<Rat>(j.at("s2"), rat_from_json);
    v.match = optional_from_json<MatchMatrix>(j.at("match"), [](const Json& m) { return m.get<MatchMatrix>(); });
}

inline Json verdict_or_null(const std::optional<Verdict>& v) {
    return optional_json(v, [](const Verdict& x) { return Json(x); });
}

inline std::optional<Verdict> verdict_from_json(const Json& j) {
    return optional_from_json<Verdict>(j, [](const Json& x) { return x.get<Verdict>(); });
}

inline void to_json(Json& j, const Report& r) {
    j = {{"input", {{"P", poly_json(r.p)}, {"Q", poly_json(r.q)}, {"P_text", format(r.p, "x")},
                    {"Q_text", format(r.q, "y")}, {"genus", r.genus}}},
         {"n", r.n},
         {"m", r.m},
         {"swapped", r.swapped},
         {"profiles", {{"P", r.profile_p}, {"Q", r.profile_q}}},
         {"hypothesis_I", {{"P", r.profile_p.injective_on_critical_points},
                           {"Q", r.profile_q.injective_on_critical_points}}},
         {"values", r.values},
         {"criteria",
          {{"unmatched_values", r.unmatched_values},
           {"matched_pairs", verdict_or_null(r.matched_pairs)},
           {"matched_pairs_gate", r.matched_pairs_gate},
           {"matched_pairs_mirror", verdict_or_null(r.matched_pairs_mirror)},
           {"s2_mirror", optional_json(r.s2_mirror, rat_json)},
           {"equal_degree", verdict_or_null(r.equal_degree)},
           {"equal_degree_gate", r.equal_degree_gate}}},
         {"verdict", r.combined},
         {"decided_by", r.decided_by}};
}

inline void from_json(const Json& j, Report& r) {
    const Json& in = j.at("input");
    r.p = poly_from_json(in.at("P"));
    r.q = poly_from_json(in.at("Q"));
    r.genus = in.at("genus").get<int>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.swapped = j.at("swapped").get<bool>();
    r.profile_p = j.at("profiles").at("P").get<CriticalProfile>();
    r.profile_q = j.at("profiles").at("Q").get<CriticalProfile>();
    r.values = j.at("values").get<CriteriaValues>();
    const Json& c = j.at("criteria");
    r.unmatched_values = c.at("unmatched_values").get<Verdict>();
    r.matched_pairs = verdict_from_json(c.at("matched_pairs"));
    r.matched_pairs_gate = c.at("matched_pairs_gate").get<std::string>();
    r.matched_pairs_mirror = verdict_from_json(c.at("matched_pairs_mirror"));
    r.s2_mirror = optional_from_json<Rat>(c.at("s2_mirror"), rat_from_json);
    r.equal_degree = verdict_from_json(c.at("equal_degree"));
    r.equal_degree_gate = c.at("equal_degree_gate").get<std::string>();
    r.combined = j.at("verdict").get<Verdict>();
    r.decided_by = j.at("decided_by").get<std::string>();
}

// --- solution identities ------------------------------------------------

inline Json place_json(const Place& p) { return p.is_infinity() ? Json("inf") : poly_json(p.generator()); }

inline Place place_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return Place::infinity();
    return Place::finite(poly_from_json(j));
}

inline void to_json(Json& j, const LocalMultiplicityCheck& c) {
    j = {{"place", place_json(c.place)}, {"e", c.p_multiplicity}, {"d", c.q_multiplicity},
         {"order_f", c.order_f}, {"order_g", c.order_g}, {"holds", c.holds}};
}

inline void from_json(const Json& j, LocalMultiplicityCheck& c) {
    c.place = place_from_json(j.at("place"));
    c.p_multiplicity = j.at("e").get<int>();
    c.q_multiplicity = j.at("d").get<int>();
    c.order_f = j.at("order_f").get<int>();
    c.order_g = j.at("order_g").get<int>();
    c.holds = j.at("holds").get<bool>();
}

inline void to_json(Json& j, const IdentityReport& r) {
    j = {{"swapped", r.swapped},
         {"distinct", r.distinct},
         {"n", r.n},
         {"m", r.m},
         {"height_f", r.height_f},
         {"height_g", r.height_g},
         {"degree_height_identity", r.degree_height_identity},
         {"derivative_pair_height", r.derivative_pair_height},
         {"ramification_surplus", r.ramification_surplus},
         {"bound_lhs", rat_json(r.bound_lhs)},
         {"bound_rhs", rat_json(r.bound_rhs)},
         {"derivative_bound", r.derivative_bound},
         {"pole_order_sum", r.pole_order_sum},
         {"pole_order_expected", r.pole_order_expected},
         {"pole_identity", r.pole_identity},
         {"local_checks", r.local_checks},
         {"local_multiplicities", r.local_multiplicities},
         {"scaling_samples", r.scaling_samples},
         {"scaling_invariance", r.scaling_invariance},
         {"all_hold", r.all_hold()},
         {"notes", r.notes}};
}

inline void from_json(const Json& j, IdentityReport& r) {
    r.swapped = j.at("swapped").get<bool>();
    r.distinct = j.at("distinct").get<bool>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.height_f = j.at("height_f").get<long long>();
    r.height_g = j.at("height_g").get<long long>();
    r.degree_height_identity = j.at("degree_height_identity").get<bool>();
    r.derivative_pair_height = j.at("derivative_pair_height").get<long long>();
    r.ramification_surplus = j.at("ramification_surplus").get<long long>();
    r.bound_lhs = rat_from_json(j.at("bound_lhs"));
    r.bound_rhs = rat_from_json(j.at("bound_rhs"));
    r.derivative_bound = j.at("derivative_bound").get<bool>();
    r.pole_order_sum = j.at("pole_order_sum").get<long long>();
    r.pole_order_expected = j.at("pole_order_expected").get<long long>();
    r.pole_identity = j.at("pole_identity").get<bool>();
    r.local_checks = j.at("local_checks").get<std::vector<LocalMultiplicityCheck>>();
    r.local_multiplicities = j.at("local_multiplicities").get<bool>();
    r.scaling_samples = j.at("scaling_samples").get<int>();
    r.scaling_invariance = j.at("scaling_invariance").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
}

}  // namespace sepcurve
