#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sl2trace/tracepoly.hpp"
#include "sl2trace/word.hpp"

namespace sl2trace {

/// Rewrite rules of the trace reduction, in priority order.
enum class Rule {
    Base,            // R0: empty word or a single letter
    PowerCollapse,   // R1: tr(A^k U) = tr(A) tr(A^(k-1) U) - tr(A^(k-2) U)
    RepeatSame,      // R2: tr(AUAV) = tr(AU) tr(AV) - tr(U^-1 V)
    RepeatOpposite,  // R3: tr(AUA^-1V) = tr(AU) tr(A^-1V) - tr(A^2 U V^-1), A^2 split at once
    InverseElim,     // R4: tr(U A^-1) = tr(A) tr(U) - tr(UA)
    Sort,            // R5: adjacent-swap identity for squarefree positive words
    Sorted,          // R6: ascending squarefree positive word is a basis variable
};

const char* rule_name(Rule r) noexcept;

/// Well-founded measure: (length, negative letters, inversions), compared
/// lexicographically on the cyclic canonical representative.
struct ReductionMeasure {
    std::size_t length = 0;
    std::size_t negatives = 0;
    std::size_t inversions = 0;

    friend auto operator<=>(const ReductionMeasure&, const ReductionMeasure&) = default;
};

ReductionMeasure reduction_measure(const CyclicWord& w);

/// One rewrite of tr(w) as sum_k coeff_k * prod_j tr(factor_kj).
struct RewriteStep {
    struct Term {
        int coeff = 1;
        std::vector<FreeWord> factors;
    };
    Rule rule = Rule::Base;
    /// Set only for Base and Sorted.
    std::optional<TracePoly> value;
    std::vector<Term> terms;
};

/// A single deterministic rewrite of a cyclic word. Every factor word in the
/// result has a strictly smaller reduction_measure than w.
RewriteStep rewrite_step(const CyclicWord& w);

/// Of the cyclic classes of w and w^-1, the one with the smaller reduction
/// measure (ties broken by word order). Both have the same trace, so reducing
/// this representative makes tr(w) and tr(w^-1) term-identical.
CyclicWord trace_class(const FreeWord& w);

/// Memoized trace reduction. One instance per work unit; not thread-safe.
class TraceReducer {
public:
    /// Throws Errc::IndexOutOfRange if w uses a generator above n.
    const TracePoly& reduce(const FreeWord& w, int n);
    const TracePoly& reduce(const CyclicWord& w);

    std::size_t cache_size() const noexcept { return cache_.size(); }
    void clear() { cache_.clear(); }

private:
    std::unordered_map<CyclicWord, TracePoly, CyclicWordHash> cache_;
};

/// Polynomial P in the basis traces with P(tr basis) = tr(w(M)) for every
/// tuple M in SL(2,C)^n. Uses a per-thread cache.
TracePoly reduce_trace(const FreeWord& w, int n);

}  // namespace sl2trace
