#include "sl2trace/json_io.hpp"

namespace sl2trace::json_io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(Errc::Schema, what); }

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        schema("complex value must be [re, im], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const Mat2C& m) {
    return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

Mat2C matrix_from_json(const json& j, double det_tol) {
    const auto row_ok = [](const json& r) { return r.is_array() && r.size() == 2; };
    if (!j.is_array() || j.size() != 2 || !row_ok(j[0]) || !row_ok(j[1])) {
        schema("matrix must be [[a, b], [c, d]] with complex entries");
    }
    return Mat2C::make(complex_from_json(j[0][0]), complex_from_json(j[0][1]), complex_from_json(j[1][0]),
                       complex_from_json(j[1][1]), det_tol);
}

std::vector<Mat2C> matrices_from_json(const json& j, double det_tol) {
    if (!j.is_array()) schema("expected a list of matrices");
    std::vector<Mat2C> out;
    for (const json& m : j) out.push_back(matrix_from_json(m, det_tol));
    return out;
}

json to_json(const TracePoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (const auto& [v, e] : m.factors()) mono[v.name()] = e;
        out.push_back({{"coeff", c.get_str()}, {"monomial", mono}});
    }
    return out;
}

TracePoly poly_from_json(const json& j) {
    if (!j.is_array()) schema("polynomial must be a list of terms");
    TracePoly out;
    for (const json& t : j) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("monomial") || !t["coeff"].is_string() ||
            !t["monomial"].is_object()) {
            schema("term must be {\"coeff\": string, \"monomial\": {var: exponent}}");
        }
        mpz_class coeff;
        if (coeff.set_str(t["coeff"].get<std::string>(), 10) != 0) schema("bad coefficient " + t["coeff"].dump());
        Monomial m;
        for (const auto& [name, e] : t["monomial"].items()) {
            if (!e.is_number_unsigned()) schema("exponent must be a nonnegative integer");
            m = m * Monomial(BasisVar::parse(name), e.get<unsigned>());
        }
        out += TracePoly::term(coeff, m);
    }
    return out;
}

json to_json(const TraceValues& values) {
    json out = json::object();
    for (const auto& [v, z] : values) out[v.name()] = to_json(z);
    return out;
}

TraceValues values_from_json(const json& j) {
    if (!j.is_object()) schema("trace values must be an object {\"t1\": [re, im], ...}");
    TraceValues out;
    for (const auto& [name, z] : j.items()) out[BasisVar::parse(name)] = complex_from_json(z);
    return out;
}

json to_json(const CanonicalPair& f) {
    json out = {{"branch", branch_name(f.branch)},
                {"conjugator", to_json(f.conjugator)},
                {"h1", to_json(f.h1)},
                {"h2", to_json(f.h2)},
                {"rho", to_json(f.rho)}};
    if (f.branch == FrameBranch::Parabolic) out["lambda"] = to_json(f.lambda);
    return out;
}

json to_json(const TraceCoordinates& c) { return {{"n", c.n()}, {"traces", to_json(c.values())}}; }

TraceCoordinates coordinates_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("traces")) {
        schema("coordinates must be {\"n\": int, \"traces\": {...}}");
    }
    return TraceCoordinates(j["n"].get<int>(), values_from_json(j["traces"]));
}

json to_json(const ReconstructedGroup& g) {
    json gens = json::array();
    for (const Mat2C& m : g.generators) gens.push_back(to_json(m));
    json out = {{"generators", gens}, {"residuals", g.residuals}};
    if (g.frame) {
        out["rho"] = to_json(g.frame->rho);
        out["branch"] = branch_name(g.frame->branch);
    }
    return out;
}

json to_json(const TraceCheck& c) {
    json out = {{"preserving", c.preserving}, {"checked_words", c.checked_words}};
    if (c.witness) {
        out["witness"] = format_word(*c.witness);
        out["domain_trace"] = to_json(c.domain_trace);
        out["image_trace"] = to_json(c.image_trace);
    }
    return out;
}

json to_json(const HomVerdict& v) {
    json out = {{"kind", verdict_name(v.kind)},
                {"checked_words", v.checked_words},
                {"domain_has_free_pair", v.domain_has_free_pair},
                {"image_has_free_pair", v.image_has_free_pair}};
    if (v.certificate) out["certificate"] = to_json(*v.certificate);
    if (v.witness) out["witness"] = format_word(*v.witness);
    if (v.frame_words) {
        out["frame_words"] = json::array({format_word(v.frame_words->first), format_word(v.frame_words->second)});
    }
    return out;
}

json to_json(const RelatorReport& r) {
    return {{"word", format_word(r.word)}, {"distance", r.distance}, {"trace", to_json(r.trace)}};
}

json to_json(const LocalSolution& s) {
    return {{"value", to_json(s.value)},
            {"residual", s.residual},
            {"derivative", to_json(s.derivative)},
            {"iterations", s.iterations}};
}

json error_to_json(const Error& e) {
    json err = {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
    if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) err["position"] = s->position();
    if (const auto* s = dynamic_cast<const TraceMismatchError*>(&e)) {
        static constexpr const char* names[] = {"g1", "g2", "g1g2"};
        err["which"] = names[static_cast<int>(s->which())];
    }
    if (const auto* s = dynamic_cast<const InconsistentCoordinatesError*>(&e)) {
        err["generator"] = s->generator();
        err["residual"] = s->residual();
    }
    if (const auto* s = dynamic_cast<const NoConvergenceError*>(&e)) {
        err["last_iterate"] = to_json(s->last_iterate());
        err["residual"] = s->residual();
    }
    if (const auto* s = dynamic_cast<const ZeroDerivativeError*>(&e)) {
        err["solution"] = to_json(s->solution());
        err["derivative"] = to_json(s->derivative());
    }
    return {{"error", err}};
}

}  // namespace sl2trace::json_io
