#include "support.hpp"

#include "sl2trace/reduce.hpp"
#include "sl2trace/relator.hpp"
#include "sl2trace/reconstruct.hpp"
#include "sl2trace/word.hpp"

using namespace sl2trace;
using namespace sl2trace::test;

namespace {

BasisVar var(std::vector<int> idx) { return BasisVar(idx); }
TracePoly t(std::vector<int> idx) { return TracePoly::variable(var(std::move(idx))); }

const FreeWord kComm = parse_word("A1 A2 A1^-1 A2^-1");

RelatorEquation commutator_eq(RelatorSign sign, Complex t1, Complex t2) {
    return RelatorEquation::make(kComm, sign, var({1, 2}), {{var({1}), t1}, {var({2}), t2}});
}

TracePoly random_poly(Rng& rng) {
    TracePoly p = static_cast<long>(uniform_int(rng, -5, 5));
    const std::vector<BasisVar> vars = basis_for(3);
    for (int k = 0; k < 6; ++k) {
        TracePoly m = static_cast<long>(uniform_int(rng, -4, 4));
        const long deg = uniform_int(rng, 1, 4);
        for (long d = 0; d < deg; ++d) m = m * TracePoly::variable(vars[static_cast<std::size_t>(uniform_int(rng, 0, 6))]);
        p += m;
    }
    return p;
}

}  // namespace

TEST_CASE("differentiate") {
    const TracePoly comm = reduce_trace(kComm, 2);
    CHECK(differentiate(comm, var({1, 2})) == 2 * t({1, 2}) - t({1}) * t({2}));
    CHECK(differentiate(TracePoly(2), var({1})).is_zero());
    CHECK(differentiate(t({1}) * t({1}) - 2, var({1})) == 2 * t({1}));
    CHECK(differentiate(t({1}) * t({1}) * t({1}) * t({2}), var({1})) == 3 * t({1}) * t({1}) * t({2}));
}

TEST_CASE("exact derivative against central differences") {
    Rng rng(15);
    for (int k = 0; k < 100; ++k) {
        const TracePoly p = random_poly(rng);
        TraceValues at;
        for (BasisVar v : basis_for(3)) at[v] = random_complex(rng, 1.5);
        for (BasisVar v : p.variables()) {
            const double h = 1e-6;
            TraceValues up = at;
            TraceValues down = at;
            up[v] += h;
            down[v] -= h;
            const Complex fd = (evaluate_poly(p, up) - evaluate_poly(p, down)) / (2.0 * h);
            const Complex exact = evaluate_poly(differentiate(p, v), at);
            CHECK(std::abs(exact - fd) <= 1e-5 * (1.0 + std::abs(exact)));
        }
    }
}

TEST_CASE("restriction to one variable") {
    const TracePoly comm = reduce_trace(kComm, 2);
    const std::vector<Complex> c = restrict_to(comm, var({1, 2}), {{var({1}), 3.0}, {var({2}), 3.0}});
    REQUIRE(c.size() == 3);
    CHECK(std::abs(c[0] - 16.0) < 1e-12);
    CHECK(std::abs(c[1] + 9.0) < 1e-12);
    CHECK(std::abs(c[2] - 1.0) < 1e-12);
}

TEST_CASE("commutator relator roots") {
    const RelatorEquation eq = commutator_eq(RelatorSign::Plus2, 3.0, 3.0);
    const LocalSolution low = solve_for_variable(eq, 1.0);
    const LocalSolution high = solve_for_variable(eq, 10.0);
    CHECK(std::abs(low.value - 2.0) < 1e-10);
    CHECK(std::abs(high.value - 7.0) < 1e-10);
    CHECK(low.residual <= 1e-12);
    CHECK(high.residual <= 1e-12);
    CHECK(std::abs(low.derivative + 5.0) < 1e-9);
    CHECK(std::abs(high.derivative - 5.0) < 1e-9);

    // Starting on a solution stays there.
    const LocalSolution again = solve_for_variable(eq, 2.0);
    CHECK(again.iterations <= 2);
    CHECK(std::abs(again.value - 2.0) < 1e-12);
}

TEST_CASE("double roots violate the proviso") {
    const auto zero_derivative = [](const RelatorEquation& eq, Complex guess) {
        try {
            solve_for_variable(eq, guess);
        } catch (const ZeroDerivativeError& e) {
            return std::abs(e.derivative()) < 1e-5;
        }
        return false;
    };
    // t12^2 - 2 = -2.
    CHECK(zero_derivative(commutator_eq(RelatorSign::Minus2, 0.0, 0.0), Complex(1.0, 0.3)));
    // (t12 - 2)^2 = 0.
    CHECK(zero_derivative(commutator_eq(RelatorSign::Plus2, 2.0, 2.0), 1.0));
    CHECK(zero_derivative(commutator_eq(RelatorSign::Plus2, 2.0, 2.0), Complex(5.0, -1.0)));
}

TEST_CASE("single letter relator") {
    const RelatorEquation eq = RelatorEquation::make(parse_word("A1"), RelatorSign::Plus2, var({1}), {});
    const LocalSolution s = solve_for_variable(eq, 0.0);
    CHECK(std::abs(s.value - 2.0) < 1e-14);
    CHECK(s.derivative == Complex(1.0));
}

TEST_CASE("equation construction errors") {
    CHECK(thrown_code([] {
              RelatorEquation::make(kComm, RelatorSign::Plus2, var({3}), {{var({1}), 1.0}, {var({2}), 1.0}});
          }) == Errc::TargetAbsent);
    CHECK(thrown_code([] { RelatorEquation::make(kComm, RelatorSign::Plus2, var({1, 2}), {{var({1}), 1.0}}); }) ==
          Errc::MissingVariable);
    // The target is dropped from the fixed values if present.
    const RelatorEquation eq = RelatorEquation::make(kComm, RelatorSign::Plus2, var({1, 2}),
                                                     {{var({1}), 3.0}, {var({2}), 3.0}, {var({1, 2}), 100.0}});
    CHECK_FALSE(eq.fixed.contains(var({1, 2})));
}

TEST_CASE("Newton reports non-convergence") {
    // t1^2 - 2 = 2 from far away needs more than two steps.
    const RelatorEquation eq = RelatorEquation::make(parse_word("A1^2"), RelatorSign::Plus2, var({1}), {});
    CHECK_NOTHROW(solve_for_variable(eq, 1.0));
    NewtonOptions tight;
    tight.max_iter = 2;
    CHECK(thrown_code([&] { solve_for_variable(eq, Complex(100.0, 50.0), tight); }) == Errc::NoConvergence);
}

TEST_CASE("proviso scan") {
    const TracePoly comm = reduce_trace(kComm, 2);
    const auto scan = proviso_scan(comm, {{var({1}), 3.0}, {var({2}), 3.0}, {var({1, 2}), 2.0}});
    CHECK(std::abs(scan.at(var({1}))) < 1e-12);
    CHECK(std::abs(scan.at(var({2}))) < 1e-12);
    CHECK(std::abs(scan.at(var({1, 2})) + 5.0) < 1e-12);
    const auto constant = proviso_scan(TracePoly(2), {{var({1}), 1.0}});
    CHECK(constant.at(var({1})) == Complex(0.0));
    CHECK(proviso_scan(t({1}) * t({1}) - 2, {{var({1}), 3.0}}).at(var({1})) == Complex(6.0));
}

TEST_CASE("solved coordinates are realized by a group satisfying the relator") {
    // A1^2 A2 with t1, t2 fixed: solve tr = -2 for t12, rebuild the pair, and
    // evaluate the relator word on it.
    const FreeWord w = parse_word("A1^2 A2 A1^-1 A2");
    Rng rng(16);
    int solved = 0;
    for (int k = 0; k < 20; ++k) {
        const Complex t1 = random_complex(rng, 2.0) + 2.5;
        const Complex t2 = random_complex(rng, 2.0) + 2.5;
        const RelatorEquation eq = RelatorEquation::make(w, RelatorSign::Minus2, var({1, 2}),
                                                         {{var({1}), t1}, {var({2}), t2}});
        LocalSolution s;
        try {
            s = solve_for_variable(eq, random_complex(rng, 3.0));
        } catch (const Error&) {
            continue;
        }
        ++solved;
        const ReconstructedGroup g = reconstruct_group(
            TraceCoordinates(2, {{var({1}), t1}, {var({2}), t2}, {var({1, 2}), s.value}}));
        CHECK(std::abs(evaluate_word(w, g.generators).trace() + 2.0) < 1e-6);
    }
    CHECK(solved >= 10);
}
