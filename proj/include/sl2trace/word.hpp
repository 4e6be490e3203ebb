#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sl2trace {

/// A power A_generator^exponent of one generator. Generators are 1-based.
struct Syllable {
    int generator = 1;
    int exponent = 1;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Total order used for rotation minimality: generator index, then positive
/// exponents before negative ones, then smaller |exponent| first.
std::strong_ordering compare_syllables(const Syllable& x, const Syllable& y) noexcept;

/// A freely reduced word in the free group on A1, A2, ...
///
/// Every constructor reduces its input, so adjacent syllables always have
/// distinct generators and no exponent is zero.
class FreeWord {
public:
    FreeWord() = default;
    FreeWord(std::initializer_list<Syllable> syllables);
    explicit FreeWord(std::vector<Syllable> syllables);

    static FreeWord letter(int generator, int exponent = 1) { return FreeWord{{generator, exponent}}; }

    const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
    bool empty() const noexcept { return syllables_.empty(); }
    std::size_t syllable_count() const noexcept { return syllables_.size(); }
    int max_generator() const noexcept;

    friend FreeWord operator*(const FreeWord& x, const FreeWord& y);
    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend std::strong_ordering operator<=>(const FreeWord& x, const FreeWord& y) noexcept;

private:
    std::vector<Syllable> syllables_;
};

/// Parses e.g. "A1 A2^-1 * A3^2". Throws SyntaxError (with position) or
/// Errc::Index for generator 0.
FreeWord parse_word(std::string_view text);

/// Inverse of parse_word: "A1 A2^-1"; the empty word formats as "".
std::string format_word(const FreeWord& w);

/// Sum of |exponent| over syllables.
std::size_t length(const FreeWord& w) noexcept;
FreeWord invert(const FreeWord& w);
std::size_t occurrence_count(const FreeWord& w, int generator) noexcept;

/// One letter per unit of exponent, each with exponent +-1.
std::vector<Syllable> letters(const FreeWord& w);

/// Conjugacy class representative: cyclically reduced, then the least rotation.
class CyclicWord {
public:
    const FreeWord& representative() const noexcept { return rep_; }

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend auto operator<=>(const CyclicWord& x, const CyclicWord& y) noexcept {
        return x.rep_ <=> y.rep_;
    }

private:
    friend CyclicWord cyclic_canonical(const FreeWord& w);
    explicit CyclicWord(FreeWord rep) : rep_(std::move(rep)) {}
    FreeWord rep_;
};

CyclicWord cyclic_canonical(const FreeWord& w);

struct CyclicWordHash {
    std::size_t operator()(const CyclicWord& w) const noexcept;
};

}  // namespace sl2trace
