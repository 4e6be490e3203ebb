#include "sl2trace/sl2.hpp"

#include <algorithm>
#include <cmath>

#include "sl2trace/word.hpp"

namespace sl2trace {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Mat2C Mat2C::make(Complex a, Complex b, Complex c, Complex d, double det_tol) {
    if (!finite(a) || !finite(b) || !finite(c) || !finite(d)) {
        throw Error(Errc::InvalidMatrix, "matrix entry is not finite");
    }
    Mat2C m{a, b, c, d};
    if (std::abs(m.det() - 1.0) > det_tol) {
        throw Error(Errc::InvalidMatrix,
                    "determinant differs from 1 by " + std::to_string(std::abs(m.det() - 1.0)));
    }
    return m;
}

Mat2C power(const Mat2C& x, int exponent) {
    Mat2C base = exponent < 0 ? inverse(x) : x;
    unsigned k = static_cast<unsigned>(exponent < 0 ? -static_cast<long>(exponent) : exponent);
    Mat2C result;
    while (k != 0) {
        if (k & 1U) result = result * base;
        base = base * base;
        k >>= 1U;
    }
    return result;
}

double max_entry_distance(const Mat2C& x, const Mat2C& y) {
    return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

double max_entry(const Mat2C& x) {
    return std::max({std::abs(x.a), std::abs(x.b), std::abs(x.c), std::abs(x.d)});
}

bool is_plus_minus_identity(const Mat2C& g, double entry_tol) {
    const Mat2C id;
    return max_entry_distance(g, id) <= entry_tol || max_entry_distance(g, -id) <= entry_tol;
}

bool is_parabolic_trace(Complex t, double trace_tol) {
    return std::min(std::abs(t - 2.0), std::abs(t + 2.0)) <= trace_tol;
}

Mat2C renormalize_det(const Mat2C& x) {
    const Complex s = std::sqrt(x.det());
    return {x.a / s, x.b / s, x.c / s, x.d / s};
}

bool SpherePoint::near(const SpherePoint& other, double tol) const {
    if (is_infinite() || other.is_infinite()) return is_infinite() && other.is_infinite();
    const double scale = 1.0 + std::max(std::abs(*z_), std::abs(*other.z_));
    return std::abs(*z_ - *other.z_) <= tol * scale;
}

FixedPointSet fixed_points(const Mat2C& g, const Tolerances& tol) {
    if (is_plus_minus_identity(g, tol.entry)) return {FixedPointKind::Identity, {}};

    const bool parabolic = is_parabolic_trace(g.trace(), tol.trace);
    if (std::abs(g.c) <= tol.entry) {
        // Infinity is fixed; the other root of (d - a) z = b, if any, is finite.
        if (parabolic) return {FixedPointKind::OnePoint, {SpherePoint::infinity()}};
        return {FixedPointKind::TwoPoints,
                {SpherePoint::finite(g.b / (g.d - g.a)), SpherePoint::infinity()}};
    }

    // c z^2 + (d - a) z - b = 0, discriminant tr^2 - 4.
    const Complex lin = g.d - g.a;
    if (parabolic) return {FixedPointKind::OnePoint, {SpherePoint::finite(-lin / (2.0 * g.c))}};

    const Complex root = std::sqrt(lin * lin + 4.0 * g.b * g.c);
    const Complex q = std::abs(lin + root) >= std::abs(lin - root) ? -0.5 * (lin + root)
                                                                   : -0.5 * (lin - root);
    return {FixedPointKind::TwoPoints, {SpherePoint::finite(q / g.c), SpherePoint::finite(-g.b / q)}};
}

Mat2C commutator(const Mat2C& g1, const Mat2C& g2) {
    return g1 * g2 * inverse(g1) * inverse(g2);
}

bool shares_fixed_point(const Mat2C& g1, const Mat2C& g2, const Tolerances& tol) {
    if (is_plus_minus_identity(g1, tol.entry) || is_plus_minus_identity(g2, tol.entry)) {
        throw Error(Errc::IdentityArgument, "shares_fixed_point is undefined for +-I");
    }
    return std::abs(commutator(g1, g2).trace() - 2.0) <= tol.trace;
}

Mat2C evaluate_word(const FreeWord& w, std::span<const Mat2C> images) {
    Mat2C result;
    for (const Syllable& s : w.syllables()) {
        if (s.generator < 1 || static_cast<std::size_t>(s.generator) > images.size()) {
            throw Error(Errc::IndexOutOfRange, "generator A" + std::to_string(s.generator) +
                                                   " has no image (have " +
                                                   std::to_string(images.size()) + ")");
        }
        result = result * power(images[s.generator - 1], s.exponent);
    }
    return result;
}

}  // namespace sl2trace
