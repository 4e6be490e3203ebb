#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "sl2trace/sl2.hpp"
#include "sl2trace/word.hpp"

namespace sl2trace {

/// The one pseudorandom engine used everywhere; seeded explicitly.
using Rng = std::mt19937_64;

/// Uniform in [lo, hi). Implemented directly on the engine's bits so that
/// sequences are identical across standard libraries.
double uniform(Rng& rng, double lo, double hi);
/// Uniform integer in [lo, hi].
long uniform_int(Rng& rng, long lo, long hi);

Complex random_complex(Rng& rng, double half_width);

/// a, b, c uniform in the box [-2, 2]^2, |a| >= 0.1, d = (1 + bc) / a.
Mat2C random_sl2(Rng& rng);

/// Parabolic element e * U (1 1; 0 1) U^-1 with e = +-1 and random U.
Mat2C random_parabolic(Rng& rng, bool allow_negative = true);

/// Freely reduced word of length in [min_len, max_len] over A1..An.
FreeWord random_word(Rng& rng, int n, std::size_t max_len, std::size_t min_len = 1);

}  // namespace sl2trace
