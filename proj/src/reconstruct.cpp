#include "sl2trace/reconstruct.hpp"

#include <cmath>

#include "sl2trace/reduce.hpp"
#include "sl2trace/word.hpp"

namespace sl2trace {

std::vector<BasisVar> coordinate_keys(int n) {
    if (n < 1 || n > 63) throw Error(Errc::Schema, "generator count must be in [1, 63]");
    std::vector<BasisVar> keys;
    for (int i = 1; i <= n; ++i) keys.push_back(BasisVar::single(i));
    if (n == 1) return keys;
    keys.push_back(BasisVar({1, 2}));
    for (int i = 3; i <= n; ++i) {
        keys.push_back(BasisVar({1, i}));
        keys.push_back(BasisVar({2, i}));
        keys.push_back(BasisVar({1, 2, i}));
    }
    return keys;
}

TraceCoordinates::TraceCoordinates(int n, TraceValues values) : n_(n), values_(std::move(values)) {
    const std::vector<BasisVar> keys = coordinate_keys(n);
    if (values_.size() != keys.size()) {
        throw Error(Errc::Schema, "expected " + std::to_string(keys.size()) + " coordinates for n = " +
                                      std::to_string(n) + ", got " + std::to_string(values_.size()));
    }
    for (BasisVar k : keys) {
        if (!values_.contains(k)) throw Error(Errc::Schema, "missing coordinate " + k.name());
    }
}

TraceCoordinates extract_coordinates(std::span<const Mat2C> generators, const Tolerances& tol) {
    const int n = static_cast<int>(generators.size());
    if (n >= 2) {
        const bool degenerate = is_plus_minus_identity(generators[0], tol.entry) ||
                                is_plus_minus_identity(generators[1], tol.entry) ||
                                shares_fixed_point(generators[0], generators[1], tol);
        if (degenerate) throw Error(Errc::SharedFixedPoint, "A1 and A2 share a fixed point");
    }
    TraceValues values;
    for (BasisVar k : coordinate_keys(n)) values.emplace(k, evaluate_word(basis_word(k), generators).trace());
    return TraceCoordinates(n, std::move(values));
}

ReconstructedGroup reconstruct_group(const TraceCoordinates& coords, const ReconstructOptions& opts) {
    const int n = coords.n();
    const Complex t1 = coords.at({1});
    ReconstructedGroup out;
    if (n == 1) {
        out.generators.push_back(Mat2C::diag(choose_rho(t1)));
        out.residuals.push_back(0.0);
        return out;
    }
    if (is_parabolic_trace(t1, opts.tol.trace)) {
        throw Error(Errc::ParabolicA1, "t1 = +-2: relabel with swap_roles first");
    }

    const Complex rho = choose_rho(t1);
    const Complex gap = rho - 1.0 / rho;
    // a + d = t2, rho a + d / rho = t12
    const Complex t2 = coords.at({2});
    const Complex t12 = coords.at({1, 2});
    const Complex a = (t12 - t2 / rho) / gap;
    const Complex d = t2 - a;
    const Complex b = a * d - 1.0;
    if (std::abs(b) <= opts.tol.entry * (1.0 + std::abs(a * d))) {
        throw Error(Errc::SharedFixedPointData, "coordinates force b = 0: A1 and A2 share a fixed point");
    }

    CanonicalPair frame;
    frame.rho = rho;
    frame.h1 = Mat2C::diag(rho);
    frame.h2 = Mat2C{a, b, 1.0, d};
    frame.branch = FrameBranch::Diagonal;

    out.generators = {frame.h1, frame.h2};
    out.residuals = {std::abs(frame.h1.det() - 1.0), std::abs(frame.h2.det() - 1.0)};
    for (int i = 3; i <= n; ++i) {
        const Mat2C g = match_third_element(frame, coords.at({i}), coords.at({1, i}), coords.at({2, i}),
                                            coords.at({1, 2, i}), opts.tol);
        const double residual = std::abs(g.det() - 1.0);
        if (!(residual <= opts.recon_tol)) throw InconsistentCoordinatesError(i, residual);
        out.generators.push_back(g);
        out.residuals.push_back(residual);
    }
    out.frame = frame;
    return out;
}

const char* role_swap_name(RoleSwap s) noexcept {
    switch (s) {
        case RoleSwap::None: return "none";
        case RoleSwap::SwapFirstTwo: return "swap12";
        case RoleSwap::ProductInverse: return "product-inverse";
    }
    return "?";
}

std::vector<FreeWord> swap_words(RoleSwap s, int n) {
    std::vector<FreeWord> out;
    for (int i = 1; i <= n; ++i) out.push_back(FreeWord::letter(i));
    if (n < 2) return out;
    switch (s) {
        case RoleSwap::None: break;
        case RoleSwap::SwapFirstTwo: std::swap(out[0], out[1]); break;
        case RoleSwap::ProductInverse:
            out[0] = FreeWord{{1, 1}, {2, 1}};
            out[1] = FreeWord::letter(2, -1);
            break;
    }
    return out;
}

std::vector<Mat2C> apply_swap(RoleSwap s, std::span<const Mat2C> generators) {
    std::vector<Mat2C> out;
    for (const FreeWord& w : swap_words(s, static_cast<int>(generators.size()))) {
        out.push_back(evaluate_word(w, generators));
    }
    return out;
}

std::vector<Mat2C> undo_swap(RoleSwap s, std::span<const Mat2C> generators) {
    std::vector<Mat2C> out(generators.begin(), generators.end());
    if (out.size() < 2) return out;
    switch (s) {
        case RoleSwap::None: break;
        case RoleSwap::SwapFirstTwo: std::swap(out[0], out[1]); break;
        case RoleSwap::ProductInverse:
            // B1 = A1 A2, B2 = A2^-1  =>  A1 = B1 B2, A2 = B2^-1
            out[0] = generators[0] * generators[1];
            out[1] = inverse(generators[1]);
            break;
    }
    return out;
}

SwappedCoordinates swap_roles(const TraceCoordinates& coords, const Tolerances& tol) {
    const int n = coords.n();
    RoleSwap swap = RoleSwap::None;
    if (n >= 2 && is_parabolic_trace(coords.at({1}), tol.trace)) {
        if (!is_parabolic_trace(coords.at({2}), tol.trace)) {
            swap = RoleSwap::SwapFirstTwo;
        } else if (!is_parabolic_trace(coords.at({1, 2}), tol.trace)) {
            swap = RoleSwap::ProductInverse;
        } else {
            throw Error(Errc::AllParabolic, "t1, t2 and t12 are all +-2");
        }
    }
    if (swap == RoleSwap::None) return {swap, coords};

    // Each new coordinate is the trace of a word in the old generators;
    // reduce it symbolically and evaluate on the old coordinates.
    const std::vector<FreeWord> b = swap_words(swap, n);
    TraceReducer reducer;
    TraceValues values;
    for (BasisVar k : coordinate_keys(n)) {
        FreeWord w;
        for (int i : k.indices()) w = w * b[i - 1];
        values.emplace(k, evaluate_poly(reducer.reduce(w, n), coords.values()));
    }
    return {swap, TraceCoordinates(n, std::move(values))};
}

ReconstructedGroup reconstruct_with_swap(const TraceCoordinates& coords, const ReconstructOptions& opts,
                                         RoleSwap* used) {
    const SwappedCoordinates sc = swap_roles(coords, opts.tol);
    if (used != nullptr) *used = sc.swap;
    ReconstructedGroup g = reconstruct_group(sc.coords, opts);
    if (sc.swap != RoleSwap::None) {
        g.generators = undo_swap(sc.swap, g.generators);
        for (std::size_t i = 0; i < 2 && i < g.generators.size(); ++i) {
            g.residuals[i] = std::abs(g.generators[i].det() - 1.0);
        }
    }
    return g;
}

}  // namespace sl2trace
