#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sl2trace/normalize.hpp"
#include "sl2trace/tracepoly.hpp"

namespace sl2trace {

/// The reduced coordinate set for n generators: t_i (i = 1..n), t12, and
/// t1i, t2i, t12i for i = 3..n. 4n - 5 keys for n >= 2, {t1} for n = 1.
std::vector<BasisVar> coordinate_keys(int n);

class TraceCoordinates {
public:
    /// Throws Errc::Schema unless the key set is exactly coordinate_keys(n).
    TraceCoordinates(int n, TraceValues values);

    int n() const noexcept { return n_; }
    const TraceValues& values() const noexcept { return values_; }
    Complex at(BasisVar v) const { return values_.at(v); }
    Complex at(std::initializer_list<int> indices) const { return values_.at(BasisVar(std::vector<int>(indices))); }

private:
    int n_;
    TraceValues values_;
};

struct ReconstructedGroup {
    std::vector<Mat2C> generators;
    /// Frame of (A1, A2); absent for n = 1.
    std::optional<CanonicalPair> frame;
    /// |det - 1| per generator.
    std::vector<double> residuals;
};

struct ReconstructOptions {
    double recon_tol = 1e-7;
    Tolerances tol{};
};

/// Traces of the coordinate words. Throws Errc::SharedFixedPoint when
/// n >= 2 and A1, A2 share a fixed point (or one of them is +-I).
TraceCoordinates extract_coordinates(std::span<const Mat2C> generators, const Tolerances& tol = {});

/// Canonical generators A1 = diag(rho, 1/rho), A2 = (a b; 1 d), A_i solved
/// from (t_i, t1i, t2i, t12i). Throws Errc::ParabolicA1 (t1 = +-2, n >= 2),
/// Errc::SharedFixedPointData (b = 0) or InconsistentCoordinatesError.
ReconstructedGroup reconstruct_group(const TraceCoordinates& coords, const ReconstructOptions& opts = {});

/// Relabelings that move a non-parabolic element into first position.
enum class RoleSwap {
    None,            // (A1, A2, ...)
    SwapFirstTwo,    // (A2, A1, A3, ...)
    ProductInverse,  // (A1 A2, A2^-1, A3, ...)
};

const char* role_swap_name(RoleSwap s) noexcept;

struct SwappedCoordinates {
    RoleSwap swap = RoleSwap::None;
    TraceCoordinates coords;
};

/// Picks the relabeling (None if t1 != +-2) and derives the new coordinate set
/// from the old one through symbolic trace reduction.
/// Throws Errc::AllParabolic if t1, t2 and t12 are all +-2.
SwappedCoordinates swap_roles(const TraceCoordinates& coords, const Tolerances& tol = {});

/// New generators as words in the old ones (index i holds B_{i+1}).
std::vector<FreeWord> swap_words(RoleSwap s, int n);

/// Applies a relabeling to a generator tuple, or undoes it.
std::vector<Mat2C> apply_swap(RoleSwap s, std::span<const Mat2C> generators);
std::vector<Mat2C> undo_swap(RoleSwap s, std::span<const Mat2C> generators);

/// reconstruct_group preceded by swap_roles; the result is expressed in the
/// original labels, with the frame belonging to the relabeled pair.
ReconstructedGroup reconstruct_with_swap(const TraceCoordinates& coords, const ReconstructOptions& opts = {},
                                         RoleSwap* used = nullptr);

}  // namespace sl2trace
