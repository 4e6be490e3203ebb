#include "sl2trace/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

#include "sl2trace/error.hpp"

namespace sl2trace {

namespace {

// Appends s to a reduced word, merging or cancelling against the last syllable.
void push_reduced(std::vector<Syllable>& out, Syllable s) {
    if (s.exponent == 0) return;
    if (!out.empty() && out.back().generator == s.generator) {
        out.back().exponent += s.exponent;
        if (out.back().exponent == 0) out.pop_back();
        return;
    }
    out.push_back(s);
}

std::vector<Syllable> reduce(const std::vector<Syllable>& in) {
    std::vector<Syllable> out;
    out.reserve(in.size());
    for (const Syllable& s : in) push_reduced(out, s);
    return out;
}

}  // namespace

std::strong_ordering compare_syllables(const Syllable& x, const Syllable& y) noexcept {
    if (auto c = x.generator <=> y.generator; c != 0) return c;
    const bool xneg = x.exponent < 0;
    const bool yneg = y.exponent < 0;
    if (auto c = xneg <=> yneg; c != 0) return c;
    return std::abs(x.exponent) <=> std::abs(y.exponent);
}

FreeWord::FreeWord(std::initializer_list<Syllable> syllables)
    : syllables_(reduce(std::vector<Syllable>(syllables))) {}

FreeWord::FreeWord(std::vector<Syllable> syllables) : syllables_(reduce(syllables)) {}

int FreeWord::max_generator() const noexcept {
    int m = 0;
    for (const Syllable& s : syllables_) m = std::max(m, s.generator);
    return m;
}

FreeWord operator*(const FreeWord& x, const FreeWord& y) {
    FreeWord out;
    out.syllables_ = x.syllables_;
    for (const Syllable& s : y.syllables_) push_reduced(out.syllables_, s);
    return out;
}

std::strong_ordering operator<=>(const FreeWord& x, const FreeWord& y) noexcept {
    const std::size_t n = std::min(x.syllables_.size(), y.syllables_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare_syllables(x.syllables_[i], y.syllables_[i]); c != 0) return c;
    }
    return x.syllables_.size() <=> y.syllables_.size();
}

FreeWord parse_word(std::string_view text) {
    std::vector<Syllable> out;
    std::size_t pos = 0;
    const auto skip_sep = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) {
            ++pos;
        }
    };
    const auto read_int = [&](bool allow_sign) -> long {
        const std::size_t start = pos;
        bool negative = false;
        if (allow_sign && pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        const std::size_t digits = pos;
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > std::numeric_limits<int>::max()) throw SyntaxError(start, "integer too large");
            ++pos;
        }
        if (pos == digits) throw SyntaxError(pos, "expected digits");
        return negative ? -value : value;
    };

    skip_sep();
    bool first = true;
    while (pos < text.size()) {
        if (!first && !(std::isspace(static_cast<unsigned char>(text[pos - 1])) || text[pos - 1] == '*')) {
            throw SyntaxError(pos, "expected separator");
        }
        first = false;
        if (text[pos] != 'A') throw SyntaxError(pos, "expected 'A'");
        ++pos;
        const std::size_t index_pos = pos;
        const long generator = read_int(false);
        if (generator == 0) throw Error(Errc::Index, "generator index 0 at position " + std::to_string(index_pos));
        long exponent = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            const std::size_t exp_pos = pos;
            exponent = read_int(true);
            if (exponent == 0) throw SyntaxError(exp_pos, "exponent 0");
        }
        push_reduced(out, {static_cast<int>(generator), static_cast<int>(exponent)});
        skip_sep();
    }
    return FreeWord(std::move(out));
}

std::string format_word(const FreeWord& w) {
    std::string out;
    for (const Syllable& s : w.syllables()) {
        if (!out.empty()) out += ' ';
        out += 'A';
        out += std::to_string(s.generator);
        if (s.exponent != 1) {
            out += '^';
            out += std::to_string(s.exponent);
        }
    }
    return out;
}

std::size_t length(const FreeWord& w) noexcept {
    std::size_t total = 0;
    for (const Syllable& s : w.syllables()) total += static_cast<std::size_t>(std::abs(s.exponent));
    return total;
}

FreeWord invert(const FreeWord& w) {
    std::vector<Syllable> out(w.syllables().rbegin(), w.syllables().rend());
    for (Syllable& s : out) s.exponent = -s.exponent;
    return FreeWord(std::move(out));
}

std::size_t occurrence_count(const FreeWord& w, int generator) noexcept {
    std::size_t total = 0;
    for (const Syllable& s : w.syllables()) {
        if (s.generator == generator) total += static_cast<std::size_t>(std::abs(s.exponent));
    }
    return total;
}

std::vector<Syllable> letters(const FreeWord& w) {
    std::vector<Syllable> out;
    out.reserve(length(w));
    for (const Syllable& s : w.syllables()) {
        const int sign = s.exponent < 0 ? -1 : 1;
        for (int k = 0; k < std::abs(s.exponent); ++k) out.push_back({s.generator, sign});
    }
    return out;
}

CyclicWord cyclic_canonical(const FreeWord& w) {
    std::vector<Syllable> s = w.syllables();
    // Cyclic reduction: merge the last syllable into the first while they share a generator.
    while (s.size() >= 2 && s.front().generator == s.back().generator) {
        s.front().exponent += s.back().exponent;
        s.pop_back();
        if (s.front().exponent == 0) s.erase(s.begin());
    }
    if (s.size() <= 1) return CyclicWord(FreeWord(std::move(s)));

    const std::size_t n = s.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = compare_syllables(s[(r + i) % n], s[(best + i) % n]);
            if (c < 0) {
                best = r;
                break;
            }
            if (c > 0) break;
        }
    }
    std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(best), s.end());
    return CyclicWord(FreeWord(std::move(s)));
}

std::size_t CyclicWordHash::operator()(const CyclicWord& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const Syllable& s : w.representative().syllables()) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(s.generator));
        h *= 0x100000001b3ULL;
        h ^= static_cast<std::size_t>(static_cast<unsigned>(s.exponent));
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace sl2trace
