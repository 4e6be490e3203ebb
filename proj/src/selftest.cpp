#include "sl2trace/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sl2trace/homcheck.hpp"
#include "sl2trace/json_io.hpp"
#include "sl2trace/normalize.hpp"
#include "sl2trace/random.hpp"
#include "sl2trace/reconstruct.hpp"
#include "sl2trace/reduce.hpp"
#include "sl2trace/relator.hpp"

namespace sl2trace {

namespace {

using json_io::json;
using json_io::to_json;

double rel(Complex x, Complex y) { return std::abs(x - y) / (1.0 + std::abs(y)); }

// Records one observation; the first failure keeps its witness.
struct Tally {
    SuiteResult& r;
    void check(double err, double bound, const std::function<json()>& witness) {
        ++r.checked;
        r.max_error = std::max(r.max_error, err);
        if (!(err <= bound) && r.passed) {
            r.passed = false;
            r.failure = witness();
        }
    }
};

json tuple_json(const std::vector<Mat2C>& gens) {
    json out = json::array();
    for (const Mat2C& m : gens) out.push_back(to_json(m));
    return out;
}

std::vector<Mat2C> random_tuple(Rng& rng, int n) {
    std::vector<Mat2C> out;
    for (int i = 0; i < n; ++i) out.push_back(random_sl2(rng));
    return out;
}

void fricke_identity(Rng& rng, Tally t) {
    for (int k = 0; k < 1000; ++k) {
        const Mat2C x = random_sl2(rng);
        const Mat2C y = random_sl2(rng);
        const Complex lhs = (x * y).trace() + (inverse(x) * y).trace();
        const Complex rhs = x.trace() * y.trace();
        t.check(std::abs(lhs - rhs) / (1.0 + std::abs(x.trace()) * std::abs(y.trace())), 1e-8,
                [&] { return json{{"x", to_json(x)}, {"y", to_json(y)}}; });
    }
}

void conjugation_invariance(Rng& rng, Tally t) {
    for (int k = 0; k < 500; ++k) {
        const Mat2C u = random_sl2(rng);
        const Mat2C v = random_sl2(rng);
        t.check(rel((u * v * inverse(u)).trace(), v.trace()), 1e-9,
                [&] { return json{{"u", to_json(u)}, {"v", to_json(v)}}; });
    }
}

bool sets_intersect(const FixedPointSet& f, const FixedPointSet& g) {
    for (const SpherePoint& p : f.points) {
        for (const SpherePoint& q : g.points) {
            if (p.near(q, 1e-6)) return true;
        }
    }
    return false;
}

void fixed_point_agreement(Rng& rng, Tally t) {
    for (int k = 0; k < 400; ++k) {
        Mat2C g1 = random_sl2(rng);
        Mat2C g2 = random_sl2(rng);
        if (k % 4 == 0) {
            // Shared point: both upper triangular, then conjugated together.
            const Mat2C u = random_sl2(rng);
            const Complex r1 = random_complex(rng, 2.0) + 2.5;
            const Complex r2 = random_complex(rng, 2.0) + 2.5;
            g1 = u * Mat2C{r1, random_complex(rng, 2.0), 0.0, 1.0 / r1} * inverse(u);
            g2 = u * Mat2C{r2, random_complex(rng, 2.0), 0.0, 1.0 / r2} * inverse(u);
        }
        const bool by_trace = shares_fixed_point(g1, g2);
        const bool by_sets = sets_intersect(fixed_points(g1), fixed_points(g2));
        t.check(by_trace == by_sets ? 0.0 : 1.0, 0.0, [&] { return json{{"g1", to_json(g1)}, {"g2", to_json(g2)}}; });
    }
}

void commutator_formula(Rng& rng, Tally t) {
    for (int k = 0; k < 300; ++k) {
        Complex rho;
        do {
            rho = random_complex(rng, 3.0);
        } while (std::abs(rho) < 0.2);
        const Mat2C g1 = Mat2C::diag(rho);
        const Mat2C g2 = random_sl2(rng);
        const Complex lhs = 2.0 - commutator(g1, g2).trace();
        const Complex gap = rho - 1.0 / rho;
        const Complex rhs = g2.b * g2.c * gap * gap;
        t.check(rel(lhs, rhs), 1e-9, [&] { return json{{"g1", to_json(g1)}, {"g2", to_json(g2)}}; });
    }
}

void word_invariants(Rng& rng, Tally t) {
    for (int k = 0; k < 500; ++k) {
        const FreeWord w = random_word(rng, 4, 10);
        const FreeWord u = random_word(rng, 4, 4);
        const bool ok = parse_word(format_word(w)) == w && length(invert(w)) == length(w) &&
                        cyclic_canonical(u * w * invert(u)) == cyclic_canonical(w) &&
                        length(cyclic_canonical(w).representative()) <= length(w);
        t.check(ok ? 0.0 : 1.0, 0.0, [&] { return json{{"w", format_word(w)}, {"u", format_word(u)}}; });
    }
}

void numeric_oracle(Rng& rng, Tally t) {
    TraceReducer reducer;
    for (int k = 0; k < 200; ++k) {
        const int n = static_cast<int>(uniform_int(rng, 1, 4));
        const FreeWord w = random_word(rng, n, 12);
        const TracePoly& p = reducer.reduce(w, n);
        for (int rep = 0; rep < 3; ++rep) {
            const std::vector<Mat2C> gens = random_tuple(rng, n);
            const Complex direct = evaluate_word(w, gens).trace();
            const Complex symbolic = evaluate_poly(p, basis_traces(gens));
            t.check(rel(symbolic, direct), 1e-7,
                    [&] { return json{{"word", format_word(w)}, {"n", n}, {"generators", tuple_json(gens)}}; });
        }
    }
}

void symbolic_invariance(Rng& rng, Tally t) {
    TraceReducer reducer;
    for (int k = 0; k < 200; ++k) {
        const FreeWord w = random_word(rng, 3, 9);
        const FreeWord u = random_word(rng, 3, 3);
        const TracePoly p = reducer.reduce(w, 3);
        const bool ok = reducer.reduce(invert(w), 3) == p && reducer.reduce(u * w * invert(u), 3) == p;
        t.check(ok ? 0.0 : 1.0, 0.0, [&] { return json{{"w", format_word(w)}, {"u", format_word(u)}}; });
    }
}

// tr(xy) + tr(x^-1 y) = tr(x) tr(y). On two generators t1, t2, t12 are
// algebraically independent, so the identity holds term by term. On three,
// different words may reduce to representatives that differ by a multiple of
// the quadratic relation satisfied by t123; there the sides are compared as
// functions.
void fricke_closure(Rng& rng, Tally t) {
    TraceReducer reducer;
    for (int k = 0; k < 150; ++k) {
        const int n = k % 2 == 0 ? 2 : 3;
        const FreeWord x = random_word(rng, n, 5);
        const FreeWord y = random_word(rng, n, 5);
        const TracePoly lhs = reducer.reduce(x * y, n) + reducer.reduce(invert(x) * y, n);
        const TracePoly rhs = reducer.reduce(x, n) * reducer.reduce(y, n);
        const std::vector<Mat2C> gens = random_tuple(rng, n);
        const TraceValues at = basis_traces(gens);
        const double err = n == 2 ? (lhs == rhs ? 0.0 : 1.0) : rel(evaluate_poly(lhs, at), evaluate_poly(rhs, at));
        t.check(err, 1e-7, [&] {
            return json{{"n", n}, {"x", format_word(x)}, {"y", format_word(y)}, {"generators", tuple_json(gens)}};
        });
    }
}

void normalize_round_trip(Rng& rng, Tally t) {
    for (int k = 0; k < 60; ++k) {
        Mat2C g1;
        Mat2C g2;
        do {
            g1 = k % 6 == 5 ? random_parabolic(rng) : random_sl2(rng);
            g2 = k % 6 == 5 ? random_parabolic(rng) : random_sl2(rng);
        } while (shares_fixed_point(g1, g2));
        const Mat2C u = random_sl2(rng);
        const Mat2C h1 = u * g1 * inverse(u);
        const Mat2C h2 = u * g2 * inverse(u);
        const std::vector<Mat2C> gs{g1, g2};
        const std::vector<Mat2C> hs{h1, h2};
        const Mat2C a = conjugator_between(g1, g2, h1, h2);
        const Mat2C ainv = inverse(a);
        for (int j = 0; j < 10; ++j) {
            const FreeWord w = random_word(rng, 2, 8);
            const Mat2C target = evaluate_word(w, hs);
            const double err = max_entry_distance(a * evaluate_word(w, gs) * ainv, target) / (1.0 + max_entry(target));
            t.check(err, 1e-6, [&] {
                return json{{"g1", to_json(g1)}, {"g2", to_json(g2)}, {"u", to_json(u)}, {"word", format_word(w)}};
            });
        }
    }
}

void reconstruct_round_trip(Rng& rng, Tally t) {
    for (int n = 2; n <= 5; ++n) {
        for (int k = 0; k < 10; ++k) {
            std::vector<Mat2C> gens;
            do {
                gens = random_tuple(rng, n);
            } while (shares_fixed_point(gens[0], gens[1]));
            const ReconstructedGroup g = reconstruct_group(extract_coordinates(gens));
            const TraceValues want = basis_traces(gens);
            const TraceValues got = basis_traces(g.generators);
            double err = 0.0;
            for (const auto& [v, z] : want) err = std::max(err, rel(got.at(v), z));
            t.check(err, 1e-6, [&] { return json{{"generators", tuple_json(gens)}}; });
        }
    }
}

void homcheck_soundness(Rng& rng, Tally t) {
    for (int k = 0; k < 20; ++k) {
        const int n = static_cast<int>(uniform_int(rng, 2, 4));
        const std::vector<Mat2C> dom = random_tuple(rng, n);
        const Mat2C u = random_sl2(rng);
        std::vector<Mat2C> img;
        for (const Mat2C& g : dom) img.push_back(u * g * inverse(u));
        const HomCandidate c = HomCandidate::make(dom, img);
        const HomVerdict v = classify(c);
        double err = 1.0;
        if (v.kind == VerdictKind::Conjugation) {
            err = empirical_conjugation_check(c, *v.certificate, 50, 8, rng()).max_error;
        }
        t.check(err, 1e-6, [&] { return json{{"domain", tuple_json(dom)}, {"conjugator", to_json(u)}}; });
    }
}

void derivative_vs_difference(Rng& rng, Tally t) {
    TraceReducer reducer;
    for (int k = 0; k < 100; ++k) {
        const FreeWord w = random_word(rng, 3, 6);
        const TracePoly& p = reducer.reduce(w, 3);
        TraceValues at;
        for (BasisVar v : basis_for(3)) at[v] = random_complex(rng, 1.5);
        for (BasisVar v : p.variables()) {
            const double h = 1e-6;
            TraceValues plus = at;
            TraceValues minus = at;
            plus[v] += h;
            minus[v] -= h;
            const Complex fd = (evaluate_poly(p, plus) - evaluate_poly(p, minus)) / (2.0 * h);
            const Complex exact = evaluate_poly(differentiate(p, v), at);
            t.check(std::abs(exact - fd) / (1.0 + std::abs(exact)), 1e-5,
                    [&] { return json{{"word", format_word(w)}, {"variable", v.name()}}; });
        }
    }
}

void newton_solutions(Rng& rng, Tally t) {
    const FreeWord comm{{1, 1}, {2, 1}, {1, -1}, {2, -1}};
    const BasisVar t12({1, 2});
    for (int k = 0; k < 50; ++k) {
        TraceValues fixed{{BasisVar::single(1), random_complex(rng, 3.0)}, {BasisVar::single(2), random_complex(rng, 3.0)}};
        const RelatorEquation eq = RelatorEquation::make(comm, RelatorSign::Plus2, t12, fixed);
        double err = 1.0;
        try {
            const LocalSolution s = solve_for_variable(eq, random_complex(rng, 5.0));
            TraceValues at = fixed;
            at[t12] = s.value;
            err = std::abs(evaluate_poly(eq.poly, at) - 2.0);
        } catch (const Error&) {
            err = 1.0;
        }
        t.check(err, 1e-10, [&] { return json{{"fixed", to_json(fixed)}}; });
    }
}

}  // namespace

bool SelftestReport::passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::string SelftestReport::render() const {
    json out = {{"seed", seed}, {"passed", passed()}};
    json list = json::array();
    for (const SuiteResult& s : suites) {
        json entry = {{"name", s.name}, {"passed", s.passed}, {"checked", s.checked}, {"max_error", s.max_error}};
        if (!s.passed) entry["failure"] = s.failure;
        list.push_back(entry);
    }
    out["suites"] = list;
    return out.dump(2);
}

SelftestReport run_selftest(std::uint64_t seed) {
    using Suite = void (*)(Rng&, Tally);
    static const std::pair<const char*, Suite> suites[] = {
        {"sl2.fricke_identity", fricke_identity},
        {"sl2.conjugation_invariance", conjugation_invariance},
        {"sl2.fixed_point_agreement", fixed_point_agreement},
        {"sl2.commutator_formula", commutator_formula},
        {"word.invariants", word_invariants},
        {"tracepoly.numeric_oracle", numeric_oracle},
        {"tracepoly.symbolic_invariance", symbolic_invariance},
        {"tracepoly.fricke_closure", fricke_closure},
        {"normalize.round_trip", normalize_round_trip},
        {"reconstruct.round_trip", reconstruct_round_trip},
        {"homcheck.conjugation_soundness", homcheck_soundness},
        {"relator.derivative_vs_difference", derivative_vs_difference},
        {"relator.newton_solutions", newton_solutions},
    };

    SelftestReport report;
    report.seed = seed;
    Rng master(seed);
    for (const auto& [name, run] : suites) {
        SuiteResult r;
        r.name = name;
        Rng rng(master());
        try {
            run(rng, Tally{r});
        } catch (const std::exception& e) {
            r.passed = false;
            r.failure = json{{"exception", e.what()}};
        }
        report.suites.push_back(std::move(r));
    }
    return report;
}

}  // namespace sl2trace
