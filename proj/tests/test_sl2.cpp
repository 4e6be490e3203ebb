#include "support.hpp"

using namespace sl2trace;
using namespace sl2trace::test;

namespace {

const Mat2C kA = Mat2C::diag(3.0);
const Mat2C kB{1.0, -3.0, 1.0, -2.0};
const Mat2C kT{1.0, 1.0, 0.0, 1.0};

}  // namespace

TEST_CASE("products and inverses against hand computation") {
    const Mat2C ab = kA * kB;
    CHECK(close(ab, Mat2C{3.0, -9.0, 1.0 / 3.0, -2.0 / 3.0}));
    CHECK(close(mul(Mat2C::identity(), kB), kB));
    CHECK(close(kB * inverse(kB), Mat2C::identity()));
    CHECK(inverse(kB) == Mat2C{-2.0, 3.0, -1.0, 1.0});
    CHECK(inverse(kT) == Mat2C{1.0, -1.0, 0.0, 1.0});
    CHECK(inverse(Mat2C::identity()) == Mat2C::identity());
    CHECK(power(kB, -2) == inverse(kB) * inverse(kB));
    CHECK(power(kB, 0) == Mat2C::identity());
}

TEST_CASE("traces of the example matrices") {
    CHECK(rel(trace(kA), 10.0 / 3.0) < 1e-15);
    CHECK(trace(Mat2C::identity()) == Complex(2.0));
    CHECK(trace(kB) == Complex(-1.0));
    CHECK(rel(trace(kA * kB), 7.0 / 3.0) < 1e-15);
}

TEST_CASE("make validates the determinant and finiteness") {
    CHECK(thrown_code([] { Mat2C::make(1.0, 1.0, 1.0, 1.0); }) == Errc::InvalidMatrix);
    CHECK(thrown_code([] { Mat2C::make(NAN, 0.0, 0.0, 1.0); }) == Errc::InvalidMatrix);
    CHECK(thrown_code([] { Mat2C::make(1.0 + 1e-6, 0.0, 0.0, 1.0); }) == Errc::InvalidMatrix);
    CHECK_NOTHROW(Mat2C::make(1.0 + 1e-12, 0.0, 0.0, 1.0));
}

TEST_CASE("fixed points") {
    const FixedPointSet diag = fixed_points(kA);
    CHECK(diag.kind == FixedPointKind::TwoPoints);
    REQUIRE(diag.points.size() == 2);
    const bool has_zero = diag.points[0].near(SpherePoint::finite(0.0), 1e-12) ||
                          diag.points[1].near(SpherePoint::finite(0.0), 1e-12);
    const bool has_inf = diag.points[0].is_infinite() || diag.points[1].is_infinite();
    CHECK(has_zero);
    CHECK(has_inf);

    const FixedPointSet t = fixed_points(kT);
    CHECK(t.kind == FixedPointKind::OnePoint);
    REQUIRE(t.points.size() == 1);
    CHECK(t.points[0].is_infinite());

    const FixedPointSet l = fixed_points(Mat2C{1.0, 0.0, 2.0, 1.0});
    CHECK(l.kind == FixedPointKind::OnePoint);
    REQUIRE(l.points.size() == 1);
    CHECK(l.points[0].near(SpherePoint::finite(0.0), 1e-12));

    CHECK(fixed_points(-Mat2C::identity()).kind == FixedPointKind::Identity);
    CHECK(fixed_points(-kT).kind == FixedPointKind::OnePoint);

    // A generic element: each reported point is fixed by the Moebius map.
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        const Mat2C g = random_sl2(rng);
        for (const SpherePoint& p : fixed_points(g).points) {
            if (p.is_infinite()) {
                CHECK(std::abs(g.c) < 1e-9);
            } else {
                const Complex z = p.value();
                CHECK(std::abs(g.a * z + g.b - z * (g.c * z + g.d)) < 1e-9 * (1.0 + std::norm(z)));
            }
        }
    }
}

TEST_CASE("shared fixed points") {
    CHECK(shares_fixed_point(kA, kT));
    CHECK_FALSE(shares_fixed_point(kA, kB));
    CHECK_FALSE(shares_fixed_point(kT, Mat2C{1.0, 0.0, 1.0, 1.0}));
    CHECK(thrown_code([] { shares_fixed_point(Mat2C::identity(), kB); }) == Errc::IdentityArgument);
    CHECK(thrown_code([] { shares_fixed_point(kB, -Mat2C::identity()); }) == Errc::IdentityArgument);
}

TEST_CASE("shared fixed points agree with fixed point intersection") {
    Rng rng(5);
    int shared = 0;
    for (int k = 0; k < 300; ++k) {
        Mat2C g1 = random_sl2(rng);
        Mat2C g2 = random_sl2(rng);
        if (k % 3 == 0) {
            // Force a common fixed point: conjugate two upper triangular matrices.
            const Mat2C u = random_sl2(rng);
            const Complex r = random_complex(rng, 2.0) + 2.5;
            const Complex s = random_complex(rng, 2.0) + 2.5;
            g1 = conjugate(u, Mat2C{r, random_complex(rng, 2.0), 0.0, 1.0 / r});
            g2 = conjugate(u, Mat2C{s, random_complex(rng, 2.0), 0.0, 1.0 / s});
        }
        bool intersect = false;
        for (const SpherePoint& p : fixed_points(g1).points) {
            for (const SpherePoint& q : fixed_points(g2).points) intersect = intersect || p.near(q, 1e-6);
        }
        CHECK(shares_fixed_point(g1, g2) == intersect);
        shared += intersect ? 1 : 0;
    }
    CHECK(shared >= 100);
}

TEST_CASE("commutator trace against bc (rho - 1/rho)^2") {
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        const Complex rho = random_complex(rng, 3.0) + 0.5;
        const Mat2C g2 = random_sl2(rng);
        const Complex gap = rho - 1.0 / rho;
        CHECK(rel(2.0 - commutator(Mat2C::diag(rho), g2).trace(), g2.b * g2.c * gap * gap) < 1e-9);
    }
}

TEST_CASE("Fricke identity and conjugation invariance on random matrices") {
    Rng rng(1);
    for (int k = 0; k < 1000; ++k) {
        const Mat2C x = random_sl2(rng);
        const Mat2C y = random_sl2(rng);
        const Complex lhs = trace(x * y) + trace(inverse(x) * y);
        const Complex rhs = trace(x) * trace(y);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(trace(x)) * std::abs(trace(y))));
        CHECK(rel(trace(conjugate(x, y)), trace(y)) < 1e-9);
        CHECK(std::abs((x * y).det() - 1.0) < 2e-9);
    }
}

TEST_CASE("evaluate_word") {
    const std::vector<Mat2C> ex{kA, kB};
    CHECK(evaluate_word(parse_word("A1"), ex) == kA);
    CHECK(rel(evaluate_word(parse_word("A1 A2"), ex).trace(), 7.0 / 3.0) < 1e-15);
    const std::vector<Mat2C> commuting{Mat2C::diag(2.0), Mat2C::diag(Complex(0.5, 1.0))};
    CHECK(close(evaluate_word(parse_word("A1 A2 A1^-1 A2^-1"), commuting), Mat2C::identity()));
    CHECK(evaluate_word(FreeWord{}, ex) == Mat2C::identity());
    CHECK(thrown_code([&] { evaluate_word(parse_word("A3"), ex); }) == Errc::IndexOutOfRange);
}

TEST_CASE("renormalize_det and +-I detection") {
    const Mat2C scaled{2.0 * kB.a, 2.0 * kB.b, 2.0 * kB.c, 2.0 * kB.d};
    const Mat2C back = renormalize_det(scaled);
    CHECK(std::abs(back.det() - 1.0) < 1e-15);
    CHECK((close(back, kB) || close(back, -kB)));
    CHECK(is_plus_minus_identity(-Mat2C::identity()));
    CHECK_FALSE(is_plus_minus_identity(kT));
    CHECK(is_parabolic_trace(-2.0 + 1e-10));
    CHECK_FALSE(is_parabolic_trace(2.1));
}
