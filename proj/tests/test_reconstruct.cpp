#include "support.hpp"

#include "sl2trace/reconstruct.hpp"
#include "sl2trace/reduce.hpp"
#include "sl2trace/tracepoly.hpp"
#include "sl2trace/word.hpp"

using namespace sl2trace;
using namespace sl2trace::test;

namespace {

const Mat2C kA = Mat2C::diag(3.0);
const Mat2C kB{1.0, -3.0, 1.0, -2.0};
const Complex kGamma{0.0, -std::sqrt(3.0)};

Mat2C example_c(Complex gamma) { return Mat2C{4.0, 3.0 * gamma, gamma, -2.0}; }

BasisVar var(std::vector<int> idx) { return BasisVar(idx); }

void check_same_traces(std::span<const Mat2C> x, std::span<const Mat2C> y, double tol) {
    const TraceValues tx = basis_traces(x);
    const TraceValues ty = basis_traces(y);
    for (const auto& [v, value] : tx) {
        CAPTURE(v.name());
        CHECK(rel(ty.at(v), value) <= tol);
    }
}

}  // namespace

TEST_CASE("coordinate keys") {
    CHECK(coordinate_keys(1) == std::vector<BasisVar>{var({1})});
    CHECK(coordinate_keys(2) == std::vector<BasisVar>{var({1}), var({2}), var({1, 2})});
    CHECK(coordinate_keys(3).size() == 7);
    for (int n = 2; n <= 12; ++n) CHECK(coordinate_keys(n).size() == static_cast<std::size_t>(4 * n - 5));
}

TEST_CASE("TraceCoordinates validates its key set") {
    CHECK(thrown_code([] { TraceCoordinates(2, {{var({1}), 3.0}, {var({2}), 3.0}}); }) == Errc::Schema);
    CHECK(thrown_code([] {
              TraceCoordinates(2, {{var({1}), 3.0}, {var({2}), 3.0}, {var({1, 2}), 3.0}, {var({3}), 1.0}});
          }) == Errc::Schema);
    CHECK_NOTHROW(TraceCoordinates(2, {{var({1}), 3.0}, {var({2}), 3.0}, {var({1, 2}), 3.0}}));
}

TEST_CASE("extract_coordinates") {
    const std::vector<Mat2C> g{kA, kB};
    const TraceCoordinates c = extract_coordinates(g);
    CHECK(rel(c.at({1}), 10.0 / 3.0) < 1e-15);
    CHECK(rel(c.at({2}), -1.0) < 1e-15);
    CHECK(rel(c.at({1, 2}), 7.0 / 3.0) < 1e-15);

    const std::vector<Mat2C> with_identity{kA, kB, Mat2C::identity()};
    const TraceCoordinates ci = extract_coordinates(with_identity);
    CHECK(ci.at({3}) == Complex(2.0));
    CHECK(rel(ci.at({1, 3}), 10.0 / 3.0) < 1e-15);

    const std::vector<Mat2C> ex1{kA, kB, example_c(-kGamma)};
    CHECK(rel(extract_coordinates(ex1).at({2, 3}), 8.0) < 1e-14);

    const std::vector<Mat2C> shared{kA, Mat2C{1.0, 1.0, 0.0, 1.0}};
    CHECK(thrown_code([&] { extract_coordinates(shared); }) == Errc::SharedFixedPoint);
}

TEST_CASE("identity third generator") {
    const TraceCoordinates c(3, {{var({1}), 10.0 / 3.0},
                                 {var({2}), -1.0},
                                 {var({3}), 2.0},
                                 {var({1, 2}), 7.0 / 3.0},
                                 {var({1, 3}), 10.0 / 3.0},
                                 {var({2, 3}), -1.0},
                                 {var({1, 2, 3}), 7.0 / 3.0}});
    const ReconstructedGroup g = reconstruct_group(c);
    CHECK(close(g.generators[2], Mat2C::identity(), 1e-12));
    CHECK(close(g.generators[0], kA, 1e-12));
    CHECK(close(g.generators[1], kB, 1e-12));
}

TEST_CASE("third generator fixed by the two-branch determinant constraint") {
    // tr(BC) = 8 - 3 gamma + beta and det C = -8 - gamma beta = 1 force
    // beta = 3 gamma, gamma^2 = -3.
    CHECK(std::abs(kGamma * kGamma + 3.0) < 1e-15);
    const Mat2C c = example_c(kGamma);
    CHECK(std::abs(c.det() - 1.0) < 1e-14);
    CHECK(rel(trace(kB * c), 8.0) < 1e-15);

    const std::vector<Mat2C> gens{kA, kB, c};
    const TraceCoordinates coords = extract_coordinates(gens);
    CHECK(rel(coords.at({1, 2, 3}), Complex(40.0 / 3.0, 8.0 * std::sqrt(3.0))) < 1e-14);
    const ReconstructedGroup g = reconstruct_group(coords);
    CHECK(close(g.generators[2], c, 1e-12));
    CHECK(std::abs(g.generators[2].det() - 1.0) <= 1e-9);

    // The other branch is realizable as well and gives the conjugate value.
    const std::vector<Mat2C> other{kA, kB, example_c(-kGamma)};
    const TraceCoordinates oc = extract_coordinates(other);
    CHECK(rel(oc.at({1, 2, 3}), Complex(40.0 / 3.0, -8.0 * std::sqrt(3.0))) < 1e-14);
    CHECK(close(reconstruct_group(oc).generators[2], example_c(-kGamma), 1e-12));

    // beta from one branch with gamma from the other has determinant -17, so
    // its t123 is not realizable.
    const Mat2C mix{4.0, 3.0 * -kGamma, kGamma, -2.0};
    CHECK(std::abs(mix.det() + 17.0) < 1e-12);
    TraceValues v = coords.values();
    v[var({1, 2, 3})] = trace(kA * kB * mix);
    try {
        reconstruct_group(TraceCoordinates(3, v));
        FAIL("mismatched t123 reconstructed");
    } catch (const InconsistentCoordinatesError& e) {
        CHECK(e.generator() == 3);
        CHECK(e.residual() > 0.1);
    }
}

TEST_CASE("reconstruction round trip") {
    Rng rng(7);
    for (int n = 2; n <= 5; ++n) {
        for (int k = 0; k < 50; ++k) {
            const std::vector<Mat2C> gens = random_tuple(rng, n);
            if (shares_fixed_point(gens[0], gens[1])) continue;
            const TraceCoordinates c = extract_coordinates(gens);
            CHECK(c.values().size() == static_cast<std::size_t>(4 * n - 5));
            const ReconstructedGroup g = reconstruct_group(c);
            REQUIRE(g.generators.size() == static_cast<std::size_t>(n));
            for (double r : g.residuals) CHECK(r <= 1e-7);
            CHECK(g.generators[0] == Mat2C::diag(g.frame->rho));
            CHECK(g.generators[1].c == Complex(1.0));
            check_same_traces(gens, g.generators, 1e-6);
            for (int j = 0; j < 10; ++j) {
                const FreeWord w = random_word(rng, n, 8);
                CHECK(rel(evaluate_word(w, g.generators).trace(), evaluate_word(w, gens).trace()) < 1e-6);
            }
            // Conjugating the input leaves the output unchanged.
            const Mat2C u = random_sl2(rng);
            std::vector<Mat2C> moved;
            for (const Mat2C& m : gens) moved.push_back(conjugate(u, m));
            const ReconstructedGroup h = reconstruct_group(extract_coordinates(moved));
            for (int i = 0; i < n; ++i) CHECK(close(h.generators[static_cast<std::size_t>(i)],
                                                   g.generators[static_cast<std::size_t>(i)], 1e-6));
        }
    }
}

TEST_CASE("n = 1") {
    const ReconstructedGroup g = reconstruct_group(TraceCoordinates(1, {{var({1}), 10.0 / 3.0}}));
    REQUIRE(g.generators.size() == 1);
    CHECK(close(g.generators[0], kA, 1e-12));
    CHECK_FALSE(g.frame.has_value());
}

TEST_CASE("reconstruction errors") {
    CHECK(thrown_code([] {
              reconstruct_group(TraceCoordinates(2, {{var({1}), 2.0}, {var({2}), 3.0}, {var({1, 2}), 1.0}}));
          }) == Errc::ParabolicA1);
    // t12 = rho a + d / rho with b = ad - 1 = 0: A1 and A2 share a fixed point.
    const Complex a = 2.0;
    const Complex d = 0.5;
    CHECK(thrown_code([&] {
              reconstruct_group(TraceCoordinates(
                  2, {{var({1}), 10.0 / 3.0}, {var({2}), a + d}, {var({1, 2}), 3.0 * a + d / 3.0}}));
          }) == Errc::SharedFixedPointData);
}

TEST_CASE("role swaps") {
    const TraceCoordinates lox(2, {{var({1}), 3.0}, {var({2}), 4.0}, {var({1, 2}), 1.0}});
    CHECK(swap_roles(lox).swap == RoleSwap::None);
    const TraceCoordinates first_parabolic(2, {{var({1}), 2.0}, {var({2}), 3.0}, {var({1, 2}), 1.0}});
    CHECK(swap_roles(first_parabolic).swap == RoleSwap::SwapFirstTwo);

    const Mat2C t{1.0, 1.0, 0.0, 1.0};
    const Mat2C l{1.0, 0.0, 0.7, 1.0};
    const std::vector<Mat2C> para{t, l};
    const SwappedCoordinates s = swap_roles(extract_coordinates(para));
    CHECK(s.swap == RoleSwap::ProductInverse);
    CHECK(rel(s.coords.at({1}), 2.7) < 1e-14);
    CHECK(swap_words(RoleSwap::ProductInverse, 2) == std::vector<FreeWord>{parse_word("A1 A2"), parse_word("A2^-1")});

    CHECK(thrown_code([] {
              swap_roles(TraceCoordinates(2, {{var({1}), 2.0}, {var({2}), -2.0}, {var({1, 2}), 2.0}}));
          }) == Errc::AllParabolic);

    Rng rng(8);
    for (RoleSwap r : {RoleSwap::None, RoleSwap::SwapFirstTwo, RoleSwap::ProductInverse}) {
        const std::vector<Mat2C> g = random_tuple(rng, 4);
        const std::vector<Mat2C> back = undo_swap(r, apply_swap(r, g));
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(close(back[i], g[i], 1e-9));
    }
}

TEST_CASE("reconstruct_with_swap handles parabolic first generators") {
    Rng rng(9);
    for (int k = 0; k < 40; ++k) {
        const int n = 2 + k % 3;
        std::vector<Mat2C> gens = random_tuple(rng, n);
        gens[0] = random_parabolic(rng);
        if (k % 2 == 0) gens[1] = random_parabolic(rng);
        if (shares_fixed_point(gens[0], gens[1])) continue;
        RoleSwap used = RoleSwap::None;
        const ReconstructedGroup g = reconstruct_with_swap(extract_coordinates(gens), {}, &used);
        CHECK(used == (k % 2 == 0 ? RoleSwap::ProductInverse : RoleSwap::SwapFirstTwo));
        check_same_traces(gens, g.generators, 1e-6);
    }
}
