#pragma once

#include "sl2trace/sl2.hpp"

namespace sl2trace {

/// Which canonical frame a pair was brought to.
enum class FrameBranch {
    /// h1 = diag(rho, 1/rho), h2 = (a b; 1 d).
    Diagonal,
    /// Both elements parabolic: h1 = e1 (1 1; 0 1), h2 = e2 (1 0; lambda 1), e_i = tr(g_i)/2.
    Parabolic,
    /// g1 parabolic, g2 not: the diagonal frame of (g2, g1), so h2 = diag(rho, 1/rho)
    /// and h1 = (a b; 1 d).
    Swapped,
};

const char* branch_name(FrameBranch b) noexcept;

struct CanonicalPair {
    Mat2C conjugator;  // conjugator * g_i * conjugator^-1 = h_i
    Mat2C h1;
    Mat2C h2;
    Complex rho{1.0};     // eigenvalue of the diagonal element; +-1 in the parabolic branch
    Complex lambda{0.0};  // lower-left parameter, parabolic branch only
    FrameBranch branch = FrameBranch::Diagonal;
};

/// Root of rho^2 - t rho + 1 = 0 with |rho| >= 1; on |rho| = 1 the one with
/// argument in [0, pi).
Complex choose_rho(Complex trace);

/// Conjugates a pair without common fixed points into its canonical frame.
/// Throws Errc::IdentityArgument or Errc::SharedFixedPoint.
CanonicalPair normalize_pair(const Mat2C& g1, const Mat2C& g2, const Tolerances& tol = {});

/// A in SL(2,C) with A g_i A^-1 = h_i, from the canonical frames of both pairs.
/// Throws TraceMismatchError, Errc::SharedFixedPoint or Errc::IdentityArgument.
Mat2C conjugator_between(const Mat2C& g1, const Mat2C& g2, const Mat2C& h1, const Mat2C& h2,
                         const Tolerances& tol = {});

/// Solves for g = (w x; y z) in a diagonal frame from
///   tr g, tr(h1 g), tr(h2 g), tr(h1 h2 g).
/// The two linear systems have determinant 1/rho - rho; y is recovered by
/// dividing by b. Throws Errc::DegenerateFrame if rho^2 = 1, b = 0, or the
/// frame is not diagonal. The determinant of the result is not constrained.
Mat2C match_third_element(const CanonicalPair& frame, Complex t_g, Complex t_g1g, Complex t_g2g,
                          Complex t_g1g2g, const Tolerances& tol = {});

}  // namespace sl2trace
