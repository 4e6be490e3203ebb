#include "sl2trace/normalize.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace sl2trace {

namespace {

// Fixes the +-1 ambiguity: the largest entry gets a positive real part.
Mat2C canonical_sign(const Mat2C& m) {
    const std::array<Complex, 4> e{m.a, m.b, m.c, m.d};
    std::size_t best = 0;
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (std::abs(e[i]) > std::abs(e[best]) * (1.0 + 1e-9)) best = i;
    }
    const Complex lead = e[best];
    const bool flip = lead.real() < 0.0 || (lead.real() == 0.0 && lead.imag() < 0.0);
    return flip ? -m : m;
}

Mat2C conjugate(const Mat2C& by, const Mat2C& g) { return by * g * inverse(by); }

// Eigenvector (as a column) of m for eigenvalue lambda.
std::array<Complex, 2> eigenvector(const Mat2C& m, Complex lambda) {
    const std::array<Complex, 2> u{m.b, lambda - m.a};
    const std::array<Complex, 2> v{lambda - m.d, m.c};
    const double nu = std::norm(u[0]) + std::norm(u[1]);
    const double nv = std::norm(v[0]) + std::norm(v[1]);
    return nu >= nv ? u : v;
}

void check_pair(const Mat2C& g1, const Mat2C& g2, const Tolerances& tol) {
    if (is_plus_minus_identity(g1, tol.entry) || is_plus_minus_identity(g2, tol.entry)) {
        throw Error(Errc::IdentityArgument, "frame elements must not be +-I");
    }
    if (shares_fixed_point(g1, g2, tol)) {
        throw Error(Errc::SharedFixedPoint, "pair shares a fixed point");
    }
}

CanonicalPair diagonal_frame(const Mat2C& g1, const Mat2C& g2, Complex rho) {
    const auto v1 = eigenvector(g1, rho);
    const auto v2 = eigenvector(g1, 1.0 / rho);
    // Columns v1, v2 diagonalize g1; scale to unit determinant and invert.
    const Mat2C cols = renormalize_det(Mat2C{v1[0], v2[0], v1[1], v2[1]});
    Mat2C conj = inverse(cols);

    const Mat2C m = conjugate(conj, g2);
    const Complex s = std::sqrt(m.c);
    conj = canonical_sign(renormalize_det(Mat2C{s, 0.0, 0.0, 1.0 / s} * conj));

    CanonicalPair out;
    out.conjugator = conj;
    out.rho = rho;
    out.h1 = Mat2C::diag(rho);
    out.h2 = conjugate(conj, g2);
    out.h2.c = 1.0;
    out.branch = FrameBranch::Diagonal;
    return out;
}

CanonicalPair parabolic_frame(const Mat2C& g1, const Mat2C& g2, const Tolerances& tol) {
    const FixedPointSet f1 = fixed_points(g1, tol);
    const FixedPointSet f2 = fixed_points(g2, tol);
    const SpherePoint p1 = f1.points.front();
    const SpherePoint p2 = f2.points.front();

    // Moebius map sending p1 -> infinity and p2 -> 0.
    Mat2C t;
    if (p1.is_infinite()) {
        t = {1.0, -p2.value(), 0.0, 1.0};
    } else if (p2.is_infinite()) {
        t = {0.0, 1.0, 1.0, -p1.value()};
    } else {
        t = {1.0, -p2.value(), 1.0, -p1.value()};
    }
    t = renormalize_det(t);

    const Complex e1 = g1.trace().real() >= 0.0 ? 1.0 : -1.0;
    const Complex e2 = g2.trace().real() >= 0.0 ? 1.0 : -1.0;
    // Scale so that the translation part of g1 becomes e1.
    const Mat2C m1 = conjugate(t, g1);
    const Complex s = std::sqrt(e1 / m1.b);
    const Mat2C conj = canonical_sign(renormalize_det(Mat2C{s, 0.0, 0.0, 1.0 / s} * t));

    CanonicalPair out;
    out.conjugator = conj;
    out.rho = e1;
    out.h1 = Mat2C{e1, e1, 0.0, e1};
    const Mat2C m2 = conjugate(conj, g2);
    out.lambda = m2.c * e2;
    out.h2 = Mat2C{e2, 0.0, e2 * out.lambda, e2};
    out.branch = FrameBranch::Parabolic;
    return out;
}

CanonicalPair swap_frame(CanonicalPair f) {
    std::swap(f.h1, f.h2);
    f.branch = FrameBranch::Swapped;
    return f;
}

bool traces_close(Complex x, Complex y, double tol) {
    return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

}  // namespace

const char* branch_name(FrameBranch b) noexcept {
    switch (b) {
        case FrameBranch::Diagonal: return "diagonal";
        case FrameBranch::Parabolic: return "parabolic";
        case FrameBranch::Swapped: return "swapped";
    }
    return "?";
}

Complex choose_rho(Complex trace) {
    const Complex root = std::sqrt(trace * trace - 4.0);
    const Complex r1 = 0.5 * (trace + root);
    const Complex r2 = 0.5 * (trace - root);
    const double m1 = std::abs(r1);
    const double m2 = std::abs(r2);
    if (std::abs(m1 - m2) > 1e-12 * std::max(m1, m2)) return m1 > m2 ? r1 : r2;
    const auto upper = [](Complex z) { return z.imag() > 0.0 || (z.imag() == 0.0 && z.real() > 0.0); };
    return upper(r1) ? r1 : r2;
}

CanonicalPair normalize_pair(const Mat2C& g1, const Mat2C& g2, const Tolerances& tol) {
    check_pair(g1, g2, tol);
    if (!is_parabolic_trace(g1.trace(), tol.trace)) return diagonal_frame(g1, g2, choose_rho(g1.trace()));
    if (!is_parabolic_trace(g2.trace(), tol.trace)) {
        return swap_frame(diagonal_frame(g2, g1, choose_rho(g2.trace())));
    }
    return parabolic_frame(g1, g2, tol);
}

Mat2C conjugator_between(const Mat2C& g1, const Mat2C& g2, const Mat2C& h1, const Mat2C& h2,
                         const Tolerances& tol) {
    if (!traces_close(g1.trace(), h1.trace(), tol.trace)) {
        throw TraceMismatchError(MismatchedTrace::G1, "tr(g1) != tr(h1)");
    }
    if (!traces_close(g2.trace(), h2.trace(), tol.trace)) {
        throw TraceMismatchError(MismatchedTrace::G2, "tr(g2) != tr(h2)");
    }
    if (!traces_close((g1 * g2).trace(), (h1 * h2).trace(), tol.trace)) {
        throw TraceMismatchError(MismatchedTrace::G1G2, "tr(g1 g2) != tr(h1 h2)");
    }
    check_pair(g1, g2, tol);
    check_pair(h1, h2, tol);

    // Both frames use the branch and rho chosen for the g side.
    CanonicalPair fg;
    CanonicalPair fh;
    if (!is_parabolic_trace(g1.trace(), tol.trace)) {
        const Complex rho = choose_rho(g1.trace());
        fg = diagonal_frame(g1, g2, rho);
        fh = diagonal_frame(h1, h2, rho);
    } else if (!is_parabolic_trace(g2.trace(), tol.trace)) {
        const Complex rho = choose_rho(g2.trace());
        fg = diagonal_frame(g2, g1, rho);
        fh = diagonal_frame(h2, h1, rho);
    } else {
        fg = parabolic_frame(g1, g2, tol);
        fh = parabolic_frame(h1, h2, tol);
    }
    return canonical_sign(renormalize_det(inverse(fh.conjugator) * fg.conjugator));
}

Mat2C match_third_element(const CanonicalPair& frame, Complex t_g, Complex t_g1g, Complex t_g2g,
                          Complex t_g1g2g, const Tolerances& tol) {
    if (frame.branch != FrameBranch::Diagonal) {
        throw Error(Errc::DegenerateFrame, "third-element matching needs a diagonal frame");
    }
    const Complex rho = frame.rho;
    const Complex gap = rho - 1.0 / rho;
    if (std::abs(gap) <= tol.entry) throw Error(Errc::DegenerateFrame, "rho^2 = 1: diagonal element is +-I");
    const Complex a = frame.h2.a;
    const Complex b = frame.h2.b;
    const Complex d = frame.h2.d;
    if (std::abs(b) <= tol.entry) throw Error(Errc::DegenerateFrame, "b = 0: frame elements share a fixed point");

    // w + z = t_g, rho w + z / rho = t_g1g
    const Complex w = (t_g1g - t_g / rho) / gap;
    const Complex z = t_g - w;
    // by + x = P, rho by + x / rho = Q
    const Complex p = t_g2g - a * w - d * z;
    const Complex q = t_g1g2g - rho * a * w - d * z / rho;
    const Complex by = (q - p / rho) / gap;
    const Complex x = p - by;
    return Mat2C{w, x, by / b, z};
}

}  // namespace sl2trace
