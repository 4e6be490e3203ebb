#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "sl2trace/error.hpp"

namespace sl2trace {

class FreeWord;

using Complex = std::complex<double>;

struct Tolerances {
    double entry = 1e-9;
    double trace = 1e-8;
    double det = 1e-9;
};

/// A 2x2 complex matrix of determinant one, row-major (a b; c d).
///
/// Construction through make() validates the determinant; the raw constructor
/// is for intermediate values whose determinant the caller vouches for.
struct Mat2C {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static Mat2C identity() { return {}; }
    static Mat2C diag(Complex rho) { return {rho, 0.0, 0.0, 1.0 / rho}; }

    /// Throws Errc::InvalidMatrix if any entry is non-finite or |det - 1| > det_tol.
    static Mat2C make(Complex a, Complex b, Complex c, Complex d, double det_tol = Tolerances{}.det);

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }

    friend Mat2C operator*(const Mat2C& x, const Mat2C& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2C operator-(const Mat2C& x) { return {-x.a, -x.b, -x.c, -x.d}; }
    friend bool operator==(const Mat2C&, const Mat2C&) = default;
};

inline Mat2C mul(const Mat2C& x, const Mat2C& y) { return x * y; }
inline Complex trace(const Mat2C& x) { return x.trace(); }
/// Adjugate; equals the inverse for unit determinant.
inline Mat2C inverse(const Mat2C& x) { return {x.d, -x.b, -x.c, x.a}; }

Mat2C power(const Mat2C& x, int exponent);

/// Largest entrywise modulus of x - y.
double max_entry_distance(const Mat2C& x, const Mat2C& y);
double max_entry(const Mat2C& x);

bool is_plus_minus_identity(const Mat2C& g, double entry_tol = Tolerances{}.entry);
/// True iff tr g = +-2 within trace_tol.
bool is_parabolic_trace(Complex t, double trace_tol = Tolerances{}.trace);

/// Divide by a square root of the determinant so that det is one to rounding.
Mat2C renormalize_det(const Mat2C& x);

/// A point of the Riemann sphere; infinity is a distinguished value.
class SpherePoint {
public:
    static SpherePoint infinity() { return SpherePoint(); }
    static SpherePoint finite(Complex z) { return SpherePoint(z); }

    bool is_infinite() const noexcept { return !z_.has_value(); }
    /// Precondition: !is_infinite().
    Complex value() const { return *z_; }

    /// Infinity only matches infinity; finite points compare with a relative tolerance.
    bool near(const SpherePoint& other, double tol) const;

private:
    SpherePoint() = default;
    explicit SpherePoint(Complex z) : z_(z) {}
    std::optional<Complex> z_;
};

enum class FixedPointKind { TwoPoints, OnePoint, Identity };

struct FixedPointSet {
    FixedPointKind kind;
    std::vector<SpherePoint> points;  // empty for Identity
};

/// Fixed points of the Moebius map z -> (az + b)/(cz + d).
FixedPointSet fixed_points(const Mat2C& g, const Tolerances& tol = {});

/// Common-fixed-point test through the commutator trace: g1, g2 share a fixed
/// point iff tr[g1, g2] = 2. For g1 = diag(rho, 1/rho), g2 = (a b; c d) one has
/// 2 - tr[g1, g2] = bc (rho - 1/rho)^2.
/// Throws Errc::IdentityArgument if either argument is +-I.
bool shares_fixed_point(const Mat2C& g1, const Mat2C& g2, const Tolerances& tol = {});

Mat2C commutator(const Mat2C& g1, const Mat2C& g2);

/// Product of images raised to the word's exponents. Generator i maps to images[i-1].
/// Throws Errc::IndexOutOfRange if the word uses a generator without an image.
Mat2C evaluate_word(const FreeWord& w, std::span<const Mat2C> images);

}  // namespace sl2trace
