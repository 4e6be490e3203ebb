#pragma once

#include <doctest.h>

#include <cmath>
#include <vector>

#include "sl2trace/error.hpp"
#include "sl2trace/random.hpp"
#include "sl2trace/sl2.hpp"
#include "sl2trace/word.hpp"

namespace sl2trace::test {

inline double rel(Complex x, Complex y) { return std::abs(x - y) / (1.0 + std::abs(y)); }

inline bool close(const Mat2C& x, const Mat2C& y, double tol = 1e-9) {
    return max_entry_distance(x, y) <= tol * (1.0 + max_entry(y));
}

inline std::vector<Mat2C> random_tuple(Rng& rng, int n) {
    std::vector<Mat2C> out;
    for (int i = 0; i < n; ++i) out.push_back(random_sl2(rng));
    return out;
}

inline Mat2C conjugate(const Mat2C& u, const Mat2C& g) { return u * g * inverse(u); }

// Runs f and returns the Errc it threw; fails the test if nothing was thrown.
template <class F>
Errc thrown_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an sl2trace::Error");
    return Errc::Schema;
}

}  // namespace sl2trace::test
