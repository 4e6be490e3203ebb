#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "sl2trace/homcheck.hpp"
#include "sl2trace/json_io.hpp"
#include "sl2trace/normalize.hpp"
#include "sl2trace/reconstruct.hpp"
#include "sl2trace/reduce.hpp"
#include "sl2trace/relator.hpp"
#include "sl2trace/selftest.hpp"

namespace sl2trace::cli {

namespace {

using json_io::json;
using json_io::to_json;

struct RunConfig {
    std::string subcommand;
    std::string input = "-";
    std::string word;
    int n = 0;
    bool json_output = false;
    std::uint64_t seed = 0;
    Tolerances tol;
};

json read_input(const RunConfig& cfg, std::istream& in) {
    std::string text;
    if (cfg.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(cfg.input);
        if (!f) throw Error(Errc::Schema, "cannot open input file '" + cfg.input + "'");
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::Schema, std::string("input is not valid JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::Schema, std::string("missing field '") + key + "'");
    return j[key];
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) throw Error(Errc::Schema, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
    const FreeWord w = parse_word(cfg.word);
    const int n = cfg.n > 0 ? cfg.n : std::max(w.max_generator(), 1);
    const TracePoly p = reduce_trace(w, n);
    if (cfg.json_output) {
        out << json{{"word", format_word(w)}, {"n", n}, {"poly", p.to_string()}, {"terms", to_json(p)}}.dump(2) << '\n';
    } else {
        out << p.to_string() << '\n';
    }
    return kOk;
}

// {"word": str, "generators": [matrices]} or {"word": str, "traces": {...}}
int cmd_eval(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const json j = read_input(cfg, in);
    const FreeWord w = parse_word(string_field(j, "word"));
    json result = {{"word", format_word(w)}};
    if (j.contains("generators")) {
        const std::vector<Mat2C> gens = json_io::matrices_from_json(j["generators"], cfg.tol.det);
        const int n = static_cast<int>(gens.size());
        const TracePoly p = reduce_trace(w, n);
        const Complex direct = evaluate_word(w, gens).trace();
        const Complex symbolic = evaluate_poly(p, basis_traces(gens));
        result["n"] = n;
        result["poly"] = p.to_string();
        result["trace_direct"] = to_json(direct);
        result["trace_symbolic"] = to_json(symbolic);
        result["abs_difference"] = std::abs(direct - symbolic);
    } else {
        const TraceValues values = json_io::values_from_json(field(j, "traces"));
        int n = w.max_generator();
        for (const auto& [v, z] : values) n = std::max(n, v.max_index());
        const TracePoly p = reduce_trace(w, n);
        result["n"] = n;
        result["poly"] = p.to_string();
        result["trace_symbolic"] = to_json(evaluate_poly(p, values));
    }
    out << result.dump(2) << '\n';
    return kOk;
}

// {"g1": matrix, "g2": matrix} or [matrix, matrix]
int cmd_normalize(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const json j = read_input(cfg, in);
    std::vector<Mat2C> pair;
    if (j.is_array()) {
        pair = json_io::matrices_from_json(j, cfg.tol.det);
    } else {
        pair = {json_io::matrix_from_json(field(j, "g1"), cfg.tol.det),
                json_io::matrix_from_json(field(j, "g2"), cfg.tol.det)};
    }
    if (pair.size() != 2) throw Error(Errc::Schema, "normalize expects exactly two matrices");
    out << to_json(normalize_pair(pair[0], pair[1], cfg.tol)).dump(2) << '\n';
    return kOk;
}

int cmd_reconstruct(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const TraceCoordinates coords = json_io::coordinates_from_json(read_input(cfg, in));
    ReconstructOptions opts;
    opts.tol = cfg.tol;
    RoleSwap swap = RoleSwap::None;
    const ReconstructedGroup g = reconstruct_with_swap(coords, opts, &swap);
    json result = to_json(g);
    result["swap"] = role_swap_name(swap);
    out << result.dump(2) << '\n';
    return kOk;
}

int cmd_check_hom(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const json j = read_input(cfg, in);
    std::vector<FreeWord> relators;
    if (j.contains("relators")) {
        if (!j["relators"].is_array()) throw Error(Errc::Schema, "'relators' must be a list of word strings");
        for (const json& r : j["relators"]) {
            if (!r.is_string()) throw Error(Errc::Schema, "'relators' must be a list of word strings");
            relators.push_back(parse_word(r.get<std::string>()));
        }
    }
    const HomCandidate c = HomCandidate::make(json_io::matrices_from_json(field(j, "domain"), cfg.tol.det),
                                              json_io::matrices_from_json(field(j, "image"), cfg.tol.det),
                                              std::move(relators), cfg.tol);
    const std::string mode = j.contains("mode") ? string_field(j, "mode") : "classify";

    json result;
    int code = kOk;
    if (mode == "thm2" || mode == "thm3") {
        const TraceCheck check =
            check_trace_preserving(c, mode == "thm2" ? CheckMode::BasisWords : CheckMode::CoordinateWords, cfg.tol);
        result = to_json(check);
        result["mode"] = mode;
        code = check.preserving ? kOk : kViolation;
    } else if (mode == "classify") {
        const HomVerdict v = classify(c, cfg.tol);
        result = to_json(v);
        result["mode"] = mode;
        result["seed"] = cfg.seed;
        if (v.kind != VerdictKind::TraceViolation) {
            result["empirical_traces"] = to_json(empirical_trace_check(c, 200, 10, cfg.seed, cfg.tol));
        }
        if (v.certificate) {
            const ConjugationCheck cc = empirical_conjugation_check(c, *v.certificate, 50, 8, cfg.seed);
            result["empirical_conjugation"] = {{"checked_words", cc.checked_words}, {"max_error", cc.max_error}};
        }
        code = v.kind == VerdictKind::Conjugation ? kOk
               : v.kind == VerdictKind::TracePreservingDegenerate ? kDegenerate
                                                                  : kViolation;
    } else {
        throw Error(Errc::Schema, "mode must be \"thm2\", \"thm3\" or \"classify\"");
    }
    if (!c.relators.empty()) {
        json reports = json::array();
        for (const RelatorReport& r : check_relators(c)) reports.push_back(to_json(r));
        result["relators"] = reports;
    }
    out << result.dump(2) << '\n';
    return code;
}

int cmd_solve_relator(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const json j = read_input(cfg, in);
    const FreeWord w = parse_word(string_field(j, "word"));
    const std::string sign = string_field(j, "sign");
    if (sign != "+2" && sign != "-2") throw Error(Errc::Schema, "sign must be \"+2\" or \"-2\"");
    const BasisVar target = BasisVar::parse(string_field(j, "target"));
    const TraceValues fixed = j.contains("fixed") ? json_io::values_from_json(j["fixed"]) : TraceValues{};
    const Complex guess = json_io::complex_from_json(field(j, "guess"));

    const RelatorEquation eq =
        RelatorEquation::make(w, sign == "+2" ? RelatorSign::Plus2 : RelatorSign::Minus2, target, fixed);
    const LocalSolution s = solve_for_variable(eq, guess);
    TraceValues at = eq.fixed;
    at[target] = s.value;
    json result = to_json(s);
    result["poly"] = eq.poly.to_string();
    result["target"] = target.name();
    json partials = json::object();
    for (const auto& [v, z] : proviso_scan(eq.poly, at)) partials[v.name()] = to_json(z);
    result["partials"] = partials;
    out << result.dump(2) << '\n';
    return kOk;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    const SelftestReport report = run_selftest(cfg.seed);
    out << report.render() << '\n';
    return report.passed() ? kOk : kSelftestFailed;
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::Syntax:
        case Errc::Index:
        case Errc::InvalidMatrix:
        case Errc::Schema:
        case Errc::MissingVariable:
        case Errc::TargetAbsent:
            return kUsage;
        case Errc::InconsistentCoordinates: return kInconsistentCoordinates;
        case Errc::ZeroDerivativeAtSolution: return kZeroDerivative;
        default: return kDomainError;
    }
}

void report(std::ostream& err, const json& j) { err << j.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trace calculus for finitely generated subgroups of SL(2,C)", "sl2trace"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Seed for every pseudorandom choice")->capture_default_str();
    app.add_option("--tol-trace", cfg.tol.trace, "Trace comparison tolerance")->capture_default_str();
    app.add_option("--tol-entry", cfg.tol.entry, "Matrix entry tolerance")->capture_default_str();
    app.add_option("--tol-det", cfg.tol.det, "Determinant tolerance for input matrices")->capture_default_str();

    auto* reduce = app.add_subcommand("reduce", "Trace polynomial of a word");
    reduce->add_option("--n", cfg.n, "Generator count (default: largest index in the word)");
    reduce->add_option("word", cfg.word, "Word, e.g. \"A1 A2 A1^-1 A2^-1\"")->required();
    reduce->add_flag("--json", cfg.json_output, "Emit the JSON term list as well");

    const auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "JSON input file, '-' for stdin")->capture_default_str();
        return sub;
    };
    with_input(app.add_subcommand("eval", "Evaluate a word's trace directly and through its polynomial"));
    with_input(app.add_subcommand("normalize", "Canonical frame of a matrix pair"));
    with_input(app.add_subcommand("reconstruct", "Generators from reduced trace coordinates"));
    with_input(app.add_subcommand("check-hom", "Classify a homomorphism given by generator images"));
    with_input(app.add_subcommand("solve-relator", "Solve tr(W) = +-2 for one trace"));
    app.add_subcommand("selftest", "Run the embedded property suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        report(err, {{"error", {{"code", "UsageError"}, {"message", e.what()}}}});
        return kUsage;
    }
    if (!(cfg.tol.trace > 0) || !(cfg.tol.entry > 0) || !(cfg.tol.det > 0)) {
        report(err, {{"error", {{"code", "UsageError"}, {"message", "tolerances must be positive"}}}});
        return kUsage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (cfg.subcommand == "reduce") return cmd_reduce(cfg, out);
        if (cfg.subcommand == "eval") return cmd_eval(cfg, in, out);
        if (cfg.subcommand == "normalize") return cmd_normalize(cfg, in, out);
        if (cfg.subcommand == "reconstruct") return cmd_reconstruct(cfg, in, out);
        if (cfg.subcommand == "check-hom") return cmd_check_hom(cfg, in, out);
        if (cfg.subcommand == "solve-relator") return cmd_solve_relator(cfg, in, out);
        return cmd_selftest(cfg, out);
    } catch (const Error& e) {
        report(err, json_io::error_to_json(e));
        return exit_code_for(e.code());
    } catch (const json::exception& e) {
        report(err, {{"error", {{"code", "SchemaError"}, {"message", e.what()}}}});
        return kUsage;
    }
}

}  // namespace sl2trace::cli
