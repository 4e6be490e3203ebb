#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sl2trace/sl2.hpp"
#include "sl2trace/word.hpp"

namespace sl2trace {

/// A candidate homomorphism A_i -> image[i], with domain elements domain[i].
struct HomCandidate {
    std::vector<Mat2C> domain;
    std::vector<Mat2C> image;
    std::vector<FreeWord> relators;

    /// Throws Errc::Schema on unequal list lengths, an empty tuple, or a
    /// relator that is not +-I in the domain.
    static HomCandidate make(std::vector<Mat2C> domain, std::vector<Mat2C> image,
                             std::vector<FreeWord> relators = {}, const Tolerances& tol = {});

    int n() const noexcept { return static_cast<int>(domain.size()); }
};

enum class CheckMode { BasisWords, CoordinateWords };

/// Outcome of comparing domain and image traces over a set of words.
struct TraceCheck {
    bool preserving = true;
    std::optional<FreeWord> witness;  // first failing word
    Complex domain_trace{};
    Complex image_trace{};
    std::size_t checked_words = 0;
};

enum class VerdictKind { Conjugation, TracePreservingDegenerate, TraceViolation };

const char* verdict_name(VerdictKind k) noexcept;

struct HomVerdict {
    VerdictKind kind = VerdictKind::TraceViolation;
    std::optional<Mat2C> certificate;  // A with A g_i A^-1 = image_i
    std::optional<FreeWord> witness;
    std::size_t checked_words = 0;
    /// Words (u, v) whose images fixed the conjugation frame.
    std::optional<std::pair<FreeWord, FreeWord>> frame_words;
    /// Whether some candidate pair without a common fixed point exists on each side.
    bool domain_has_free_pair = false;
    bool image_has_free_pair = false;
};

/// Traces agree if |x - y| <= trace_tol (1 + |x|).
bool traces_agree(Complex x, Complex y, const Tolerances& tol = {});

/// Compares traces on the ascending-product basis (2^n - 1 words) or on the
/// reduced coordinate set (4n - 5 words). CoordinateWords needs image A1, A2
/// without common fixed point; throws Errc::SharedFixedPoint otherwise.
TraceCheck check_trace_preserving(const HomCandidate& c, CheckMode mode, const Tolerances& tol = {});

/// Total classification: trace violation, conjugation with a verified
/// certificate, or trace-preserving but degenerate (every candidate pair of
/// length <= 2 words shares a fixed point on some side).
HomVerdict classify(const HomCandidate& c, const Tolerances& tol = {});

struct RelatorReport {
    FreeWord word;
    double distance = 0.0;  // min over s = +-1 of max-entry distance to s I
    Complex trace{};
};

std::vector<RelatorReport> check_relators(const HomCandidate& c);

/// Trace comparison on `count` seeded random words of length <= max_len.
TraceCheck empirical_trace_check(const HomCandidate& c, std::size_t count, std::size_t max_len,
                                 std::uint64_t seed, const Tolerances& tol = {});

struct ConjugationCheck {
    double max_error = 0.0;  // max-entry distance, relative to 1 + max entry of the image word
    std::optional<FreeWord> worst;
    std::size_t checked_words = 0;
};

/// Max relative error of A w(domain) A^-1 against w(image) over random words.
ConjugationCheck empirical_conjugation_check(const HomCandidate& c, const Mat2C& certificate, std::size_t count,
                                             std::size_t max_len, std::uint64_t seed);

}  // namespace sl2trace
