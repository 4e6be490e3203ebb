#include "sl2trace/random.hpp"

#include <vector>

namespace sl2trace {

double uniform(Rng& rng, double lo, double hi) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

long uniform_int(Rng& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng() % span);
}

Complex random_complex(Rng& rng, double half_width) {
    const double re = uniform(rng, -half_width, half_width);
    const double im = uniform(rng, -half_width, half_width);
    return {re, im};
}

Mat2C random_sl2(Rng& rng) {
    Complex a;
    do {
        a = random_complex(rng, 2.0);
    } while (std::abs(a) < 0.1);
    const Complex b = random_complex(rng, 2.0);
    const Complex c = random_complex(rng, 2.0);
    return Mat2C{a, b, c, (1.0 + b * c) / a};
}

Mat2C random_parabolic(Rng& rng, bool allow_negative) {
    const Mat2C u = random_sl2(rng);
    const Mat2C p = u * Mat2C{1.0, 1.0, 0.0, 1.0} * inverse(u);
    const bool negate = allow_negative && uniform_int(rng, 0, 1) == 1;
    return negate ? -p : p;
}

FreeWord random_word(Rng& rng, int n, std::size_t max_len, std::size_t min_len) {
    const auto len = static_cast<std::size_t>(uniform_int(rng, static_cast<long>(min_len), static_cast<long>(max_len)));
    std::vector<Syllable> letters;
    letters.reserve(len);
    while (letters.size() < len) {
        const Syllable s{static_cast<int>(uniform_int(rng, 1, n)), uniform_int(rng, 0, 1) == 0 ? 1 : -1};
        if (!letters.empty() && letters.back().generator == s.generator && letters.back().exponent == -s.exponent) {
            continue;
        }
        letters.push_back(s);
    }
    return FreeWord(std::move(letters));
}

}  // namespace sl2trace
