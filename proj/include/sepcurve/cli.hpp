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
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "analysis.hpp"
#include "criteria.hpp"
#include "funcfield.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "report_json.hpp"
#include "witness.hpp"

namespace sepcurve::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kHypothesisGate = 3, kInternalError = 4 };

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"analyze", "classify", "verify", "witness", "corpus", "oracle-check"};
    return names;
}

/// One pair (P, Q), plus (f, g) for verify.
struct InputDocument {
    Poly p;
    Poly q;
    int genus = 0;
    std::optional<RationalFunction> f;
    std::optional<RationalFunction> g;
    std::optional<ExceptionalCase> which;  ///< witness: force a case
    std::optional<Rat> tolerance;          ///< oracle-check
};

inline InputDocument parse_document(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("input document must be a JSON object");
    InputDocument doc;
    if (!j.contains("P") || !j.contains("Q")) throw InvalidArgument("input document needs \"P\" and \"Q\"");
    doc.p = poly_from_input(j.at("P"));
    doc.q = poly_from_input(j.at("Q"));
    if (j.contains("genus")) {
        if (!j.at("genus").is_number_integer()) throw InvalidArgument("genus must be an integer");
        doc.genus = j.at("genus").get<int>();
        if (doc.genus < 0) throw InvalidArgument("genus must be nonnegative");
    }
    if (j.contains("f")) doc.f = function_from_json(j.at("f"));
    if (j.contains("g")) doc.g = function_from_json(j.at("g"));
    if (j.contains("case")) {
        const auto c = j.at("case").get<std::string>();
        if (c.size() != 1) throw InvalidArgument("case must be one of A-E");
        doc.which = case_from_char(c[0]);
    }
    if (j.contains("tolerance")) doc.tolerance = rat_from_json(j.at("tolerance"));
    return doc;
}

inline Json echo(const InputDocument& doc) {
    Json j = {{"P", poly_json(doc.p)}, {"Q", poly_json(doc.q)}, {"genus", doc.genus}};
    if (doc.f) j["f"] = function_json(*doc.f);
    if (doc.g) j["g"] = function_json(*doc.g);
    return j;
}

/// Structured result of one command: the JSON body and the exit code.
struct Outcome {
    int exit_code = kOk;
    Json body;
};

inline Outcome error_outcome(int code, const std::string& kind, const std::string& message) {
    return {code, {{"error", {{"kind", kind}, {"message", message}}}}};
}

namespace detail {

inline Json classify_body(const InputDocument& doc) {
    const AnalysisInput in = AnalysisInput::make(doc.p, doc.q, doc.genus);
    Verdict v = classify_equal_degree(in);
    if (in.swapped) sepcurve::detail::swap_roles(v);
    return {{"input", echo(doc)}, {"n", in.n()}, {"m", in.m()}, {"swapped", in.swapped}, {"verdict", v}};
}

inline Json witness_body(const InputDocument& doc) {
    Json body = {{"input", echo(doc)}};
    if (doc.which) {
        WitnessResult w = witness(*doc.which, doc.p, doc.q);
        body["cases"] = Json::array({std::string(1, to_char(*doc.which))});
        body["witness"] = witness_json(w);
        return body;
    }
    Json verdict = classify_body(doc).at("verdict");
    body["cases"] = verdict.at("cases");
    body["kind"] = verdict.at("kind");
    body["witness"] = verdict.at("witness");
    if (!body["witness"].is_null() && body["witness"].at("type") == "solution") {
        SolutionPair sol = body["witness"].get<SolutionPair>();
        body["identities"] = verify_solution_identities(sol);
    }
    return body;
}

inline Json verify_body(const InputDocument& doc) {
    if (!doc.f || !doc.g) throw InvalidArgument("verify needs \"f\" and \"g\"");
    SolutionPair sol{doc.p, doc.q, *doc.f, *doc.g, *doc.f != *doc.g};
    return {{"input", echo(doc)}, {"identities", verify_solution_identities(sol)}};
}

inline Json oracle_body(const InputDocument& doc) {
    const CriticalProfile pp = critical_profile(doc.p);
    const CriticalProfile qp = critical_profile(doc.q);
    Json exact = {{"b0_sum", rat_json(unmatched_weight(pp, qp))},
                  {"b1_sum", rat_json(unmatched_weight(qp, pp))},
                  {"hypothesis_I", pp.injective_on_critical_points && qp.injective_on_critical_points}};
    std::optional<MatchMatrix> match;
    if (pp.injective_on_critical_points && qp.injective_on_critical_points) match = match_matrix(pp, qp);
    exact["match"] = optional_json(match, [](const MatchMatrix& m) { return Json(m); });

    const Rat tol = doc.tolerance.value_or(pow(Rat(1, 10), 20));
    Json body = {{"input", echo(doc)}, {"tolerance", rat_json(tol)}, {"exact", exact}};
    const CrossCheckResult numeric = numeric_cross_check(doc.p, doc.q, tol);
    if (const auto* amb = std::get_if<Ambiguous>(&numeric)) {
        body["numeric"] = {{"ambiguous", true}, {"detail", amb->detail}};
        body["agree"] = nullptr;
        return body;
    }
    const auto& nm = std::get<NumericMatch>(numeric);
    body["numeric"] = {{"ambiguous", false},
                       {"b0_sum", rat_json(nm.b0_sum)},
                       {"b1_sum", rat_json(nm.b1_sum)},
                       {"match", nm.matrix}};
    bool agree = exact["b0_sum"] == body["numeric"]["b0_sum"] && exact["b1_sum"] == body["numeric"]["b1_sum"];
    if (match) agree = agree && *match == nm.matrix;
    body["agree"] = agree;
    return body;
}

}  // namespace detail

/// Runs one non-batch command; every failure becomes an error outcome.
inline Outcome execute(const std::string& command, const Json& document) {
    try {
        const InputDocument doc = parse_document(document);
        if (command == "analyze") return {kOk, analyze(doc.p, doc.q, doc.genus)};
        if (command == "classify") return {kOk, detail::classify_body(doc)};
        if (command == "verify") return {kOk, detail::verify_body(doc)};
        if (command == "witness") return {kOk, detail::witness_body(doc)};
        if (command == "oracle-check") return {kOk, detail::oracle_body(doc)};
        return error_outcome(kInputError, "input", "unknown command '" + command + "'");
    } catch (const HypothesisNotApplicable& e) {
        return error_outcome(kHypothesisGate, "hypothesis_not_applicable", e.what());
    } catch (const InvalidArgument& e) {
        return error_outcome(kInputError, "input", e.what());
    } catch (const Json::exception& e) {
        return error_outcome(kInputError, "input", e.what());
    } catch (const NumericFailure& e) {
        return error_outcome(kInternalError, "numeric_failure", e.what());
    } catch (const InvariantViolation& e) {
        return error_outcome(kInternalError, "invariant_violation", e.what());
    } catch (const std::exception& e) {
        return error_outcome(kInternalError, "internal", e.what());
    }
}

/// Runs every entry of a corpus, each with its own "command" (default
/// analyze). Results are placed by index, so the output does not depend on
/// the number of workers.
inline Json run_corpus(const Json& entries, unsigned jobs) {
    if (!entries.is_array()) throw InvalidArgument("corpus input must be a JSON array");
    const std::size_t count = entries.size();
    std::vector<Json> results(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const Json& entry = entries[i];
            std::string command = "analyze";
            if (entry.is_object() && entry.contains("command") && entry.at("command").is_string())
                command = entry.at("command").get<std::string>();
            Outcome o = command == "corpus" ? error_outcome(kInputError, "input", "corpus entries cannot nest")
                                            : execute(command, entry);
            results[i] = {{"index", i}, {"command", command}, {"exit_code", o.exit_code}, {"result", std::move(o.body)}};
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Json summary = {{"total", count}};
    for (int code : {kOk, kInputError, kHypothesisGate, kInternalError}) {
        long n = std::count_if(results.begin(), results.end(),
                               [code](const Json& r) { return r.at("exit_code").get<int>() == code; });
        summary["exit_" + std::to_string(code)] = n;
    }
    return {{"results", results}, {"summary", summary}};
}

// --- human-readable summaries --------------------------------------------

namespace detail {

inline std::string poly_text(const Json& coeffs, const std::string& var) { return format(poly_from_json(coeffs), var); }

inline void print_verdict(std::ostream& os, const Json& v, const std::string& indent) {
    os << indent << "verdict: " << v.at("kind").get<std::string>() << '\n';
    if (!v.at("bounds").is_null())
        os << indent << "  h(f) <= " << v.at("bounds").at("h_f") << ", h(g) <= " << v.at("bounds").at("h_g") << '\n';
    if (!v.at("cases").empty()) {
        os << indent << "  cases:";
        for (const auto& c : v.at("cases")) os << ' ' << c.get<std::string>();
        os << '\n';
    }
    const Json& w = v.at("witness");
    if (!w.is_null()) {
        if (w.at("type") == "solution")
            os << indent << "  witness: f = " << w.at("f").at("text").get<std::string>()
               << ", g = " << w.at("g").at("text").get<std::string>() << '\n';
        else
            os << indent << "  witness: case " << w.at("case").get<std::string>() << " exists; "
               << w.at("reason").get<std::string>() << '\n';
    }
    for (const auto& note : v.at("notes")) os << indent << "  note: " << note.get<std::string>() << '\n';
}

inline void print_identities(std::ostream& os, const Json& r) {
    auto mark = [](const Json& b) { return b.get<bool>() ? "holds" : "FAILS"; };
    os << "n = " << r.at("n") << ", m = " << r.at("m") << ", h(f) = " << r.at("height_f")
       << ", h(g) = " << r.at("height_g") << (r.at("swapped").get<bool>() ? " (roles swapped)" : "") << '\n';
    os << "n*h(f) = m*h(g): " << mark(r.at("degree_height_identity")) << '\n';
    os << "derivative bound: " << r.at("bound_lhs").get<std::string>() << " <= "
       << r.at("bound_rhs").get<std::string>() << ": " << mark(r.at("derivative_bound")) << '\n';
    os << "pole orders: " << r.at("pole_order_sum") << " = " << r.at("pole_order_expected") << ": "
       << mark(r.at("pole_identity")) << '\n';
    os << "local multiplicities (" << r.at("local_checks").size() << " places): " << mark(r.at("local_multiplicities"))
       << '\n';
    os << "scaling invariance (" << r.at("scaling_samples") << " samples): " << mark(r.at("scaling_invariance"))
       << '\n';
    for (const auto& note : r.at("notes")) os << "note: " << note.get<std::string>() << '\n';
}

}  // namespace detail

inline std::string human_summary(const std::string& command, const Outcome& o) {
    std::ostringstream os;
    const Json& b = o.body;
    if (b.contains("error")) {
        os << "error: " << b.at("error").at("message").get<std::string>() << '\n';
        return os.str();
    }
    if (command == "analyze") {
        const Json& in = b.at("input");
        os << "P = " << in.at("P_text").get<std::string>() << "  (degree " << b.at("profiles").at("P").at("degree")
           << ")\n";
        os << "Q = " << in.at("Q_text").get<std::string>() << "  (degree " << b.at("profiles").at("Q").at("degree")
           << ")\n";
        os << "genus " << in.at("genus") << "; Hypothesis I: P " << (b.at("hypothesis_I").at("P").get<bool>() ? "yes" : "no")
           << ", Q " << (b.at("hypothesis_I").at("Q").get<bool>() ? "yes" : "no")
           << (b.at("swapped").get<bool>() ? "; criteria evaluated with P and Q exchanged" : "") << '\n';
        const Json& v = b.at("values");
        os << "b0 = " << v.at("b0_sum").get<std::string>() << ", b1 = " << v.at("b1_sum").get<std::string>()
           << ", s0 = " << v.at("s0").get<std::string>() << ", s1 = " << v.at("s1").get<std::string>();
        if (!v.at("s2").is_null()) os << ", s2 = " << v.at("s2").get<std::string>();
        os << '\n';
        os << "decided by: " << b.at("decided_by").get<std::string>() << '\n';
        detail::print_verdict(os, b.at("verdict"), "");
        const Json& c = b.at("criteria");
        if (!c.at("matched_pairs_gate").get<std::string>().empty())
            os << "matched-pair criterion skipped: " << c.at("matched_pairs_gate").get<std::string>() << '\n';
        if (!c.at("equal_degree_gate").get<std::string>().empty())
            os << "classification skipped: " << c.at("equal_degree_gate").get<std::string>() << '\n';
    } else if (command == "classify") {
        os << "equal-degree classification, n = m = " << b.at("n") << '\n';
        detail::print_verdict(os, b.at("verdict"), "");
    } else if (command == "witness") {
        os << "cases:";
        for (const auto& c : b.at("cases")) os << ' ' << c.get<std::string>();
        os << '\n';
        const Json& w = b.at("witness");
        if (w.is_null()) {
            os << "no nonconstant solutions, so no witness\n";
        } else if (w.at("type") == "solution") {
            os << "f = " << w.at("f").at("text").get<std::string>() << '\n';
            os << "g = " << w.at("g").at("text").get<std::string>() << '\n';
            if (b.contains("identities")) detail::print_identities(os, b.at("identities"));
        } else {
            os << "case " << w.at("case").get<std::string>() << ": " << w.at("reason").get<std::string>() << '\n';
        }
    } else if (command == "verify") {
        detail::print_identities(os, b.at("identities"));
    } else if (command == "oracle-check") {
        const Json& e = b.at("exact");
        const Json& n = b.at("numeric");
        os << "exact:   b0 = " << e.at("b0_sum").get<std::string>() << ", b1 = " << e.at("b1_sum").get<std::string>()
           << '\n';
        if (n.at("ambiguous").get<bool>()) {
            os << "numeric: ambiguous (" << n.at("detail").get<std::string>() << ")\n";
        } else {
            os << "numeric: b0 = " << n.at("b0_sum").get<std::string>() << ", b1 = "
               << n.at("b1_sum").get<std::string>() << '\n';
            os << (b.at("agree").get<bool>() ? "agree\n" : "DISAGREE\n");
        }
    } else if (command == "corpus") {
        const Json& s = b.at("summary");
        os << s.at("total") << " entries: " << s.at("exit_0") << " completed, " << s.at("exit_2") << " input errors, "
           << s.at("exit_3") << " gated, " << s.at("exit_4") << " internal errors\n";
        for (const auto& r : b.at("results")) {
            os << '#' << r.at("index") << ' ' << r.at("command").get<std::string>() << ": ";
            const Json& res = r.at("result");
            if (res.contains("error"))
                os << "error: " << res.at("error").at("message").get<std::string>();
            else if (res.contains("verdict"))
                os << res.at("verdict").at("kind").get<std::string>();
            else
                os << "ok";
            os << '\n';
        }
    }
    return os.str();
}

// --- entry point ----------------------------------------------------------

inline Json read_json_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) throw InvalidArgument("cannot read '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON in '") + path + "': " + e.what());
    }
}

/// Full command line: `sepcurve <command> [--json] [--genus N] [--input FILE | args...]`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of separated-variable curves P(x) = Q(y) over function fields", "sepcurve"};
    app.require_subcommand(1);
    bool as_json = false;
    std::optional<int> genus;
    std::string input_path;
    std::vector<std::string> args;
    std::string forced_case;
    std::string tolerance;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());

    const std::vector<std::pair<std::string, std::string>> help{
        {"analyze", "run every applicable criterion and report the verdict"},
        {"classify", "equal-degree classification only (genus 0, n = m, Hypothesis I)"},
        {"verify", "check the height identities for a solution: args P Q f g"},
        {"witness", "construct and verify a nonconstant solution"},
        {"corpus", "analyze a JSON array of input documents"},
        {"oracle-check", "compare exact critical-value matching with a numeric one"}};
    for (const auto& [name, text] : help) {
        CLI::App* sub = app.add_subcommand(name, text);
        sub->add_flag("--json", as_json, "machine-readable output");
        sub->add_option("--genus", genus, "genus of the function field")->check(CLI::NonNegativeNumber);
        sub->add_option("--input", input_path, "JSON input document, '-' for stdin");
        if (name == "corpus") sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
        if (name == "witness") sub->add_option("--case", forced_case, "build a witness for this case")->check(CLI::IsMember({"A", "E"}));
        if (name == "oracle-check") sub->add_option("--tolerance", tolerance, "matching tolerance (rational)");
        sub->add_option("args", args, "inline P Q (and f g for verify)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        if (!input_path.empty() && !args.empty()) throw InvalidArgument("give either --input or inline arguments");
        if (command == "corpus") {
            if (input_path.empty() && args.size() == 1) input_path = args.front();
            if (input_path.empty()) throw InvalidArgument("corpus needs a JSON array via --input");
            Json entries = read_json_file(input_path);
            if (genus && entries.is_array())
                for (auto& e : entries)
                    if (e.is_object()) e["genus"] = *genus;
            outcome = {kOk, run_corpus(entries, jobs)};
        } else {
            Json doc;
            if (!input_path.empty()) {
                doc = read_json_file(input_path);
            } else {
                const std::size_t expected = command == "verify" ? 4 : 2;
                if (args.size() != expected)
                    throw InvalidArgument(command + " expects " + std::to_string(expected) + " inline arguments, got " +
                                          std::to_string(args.size()));
                doc = {{"P", args[0]}, {"Q", args[1]}};
                if (command == "verify") {
                    doc["f"] = args[2];
                    doc["g"] = args[3];
                }
            }
            if (genus && doc.is_object()) doc["genus"] = *genus;
            if (!forced_case.empty() && doc.is_object()) doc["case"] = forced_case;
            if (!tolerance.empty() && doc.is_object()) doc["tolerance"] = tolerance;
            outcome = execute(command, doc);
        }
    } catch (const InvalidArgument& e) {
        outcome = error_outcome(kInputError, "input", e.what());
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    if (as_json) {
        Json body = outcome.body;
        body["command"] = command;
        body["exit_code"] = outcome.exit_code;
        body["timing_ms"] = elapsed.count();
        out << body.dump(2) << '\n';
    } else {
        (outcome.exit_code == kOk ? out : err) << human_summary(command, outcome);
    }
    return outcome.exit_code;
}

}  // namespace sepcurve::cli
