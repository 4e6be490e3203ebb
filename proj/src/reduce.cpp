#include "sl2trace/reduce.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>

namespace sl2trace {

namespace {

using Letters = std::vector<Syllable>;

FreeWord word_of(Letters::const_iterator first, Letters::const_iterator last) {
    return FreeWord(Letters(first, last));
}

Syllable inverse_letter(Syllable s) { return {s.generator, -s.exponent}; }

Letters rotate_to(const Letters& l, std::size_t start) {
    Letters out(l.begin() + static_cast<std::ptrdiff_t>(start), l.end());
    out.insert(out.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(start));
    return out;
}

RewriteStep base(Rule rule, TracePoly value) {
    RewriteStep s;
    s.rule = rule;
    s.value = std::move(value);
    return s;
}

RewriteStep power_collapse(const std::vector<Syllable>& syl) {
    // The first syllable A^k, |k| >= 2, of the canonical rotation.
    const auto it = std::find_if(syl.begin(), syl.end(), [](const Syllable& s) { return std::abs(s.exponent) >= 2; });
    Letters rotated = rotate_to(syl, static_cast<std::size_t>(it - syl.begin()));
    const Syllable power = rotated.front();
    const int sign = power.exponent < 0 ? -1 : 1;
    const FreeWord rest = word_of(rotated.begin() + 1, rotated.end());

    RewriteStep s;
    s.rule = Rule::PowerCollapse;
    s.terms.push_back({1, {FreeWord::letter(power.generator, sign),
                           FreeWord::letter(power.generator, power.exponent - sign) * rest}});
    s.terms.push_back({-1, {FreeWord::letter(power.generator, power.exponent - 2 * sign) * rest}});
    return s;
}

}  // namespace

const char* rule_name(Rule r) noexcept {
    switch (r) {
        case Rule::Base: return "R0";
        case Rule::PowerCollapse: return "R1";
        case Rule::RepeatSame: return "R2";
        case Rule::RepeatOpposite: return "R3";
        case Rule::InverseElim: return "R4";
        case Rule::Sort: return "R5";
        case Rule::Sorted: return "R6";
    }
    return "?";
}

ReductionMeasure reduction_measure(const CyclicWord& w) {
    const Letters l = letters(w.representative());
    ReductionMeasure m;
    m.length = l.size();
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i].exponent < 0) ++m.negatives;
        for (std::size_t j = i + 1; j < l.size(); ++j) {
            if (l[i].generator > l[j].generator) ++m.inversions;
        }
    }
    return m;
}

RewriteStep rewrite_step(const CyclicWord& w) {
    const std::vector<Syllable>& syl = w.representative().syllables();

    // R0
    if (syl.empty()) return base(Rule::Base, TracePoly(2));
    if (syl.size() == 1 && std::abs(syl.front().exponent) == 1) {
        return base(Rule::Base, TracePoly::variable(BasisVar::single(syl.front().generator)));
    }

    // R1
    if (std::any_of(syl.begin(), syl.end(), [](const Syllable& s) { return std::abs(s.exponent) >= 2; })) {
        return power_collapse(syl);
    }

    // From here every syllable is a single letter.
    const Letters& l = syl;
    std::map<int, std::vector<std::size_t>> positions;
    for (std::size_t i = 0; i < l.size(); ++i) positions[l[i].generator].push_back(i);

    // R2 / R3: the lowest generator occurring twice, first two occurrences.
    for (const auto& [generator, where] : positions) {
        if (where.size() < 2) continue;
        const Letters r = rotate_to(l, where[0]);
        const std::size_t second = where[1] - where[0];
        const Syllable a = r.front();
        const Syllable a2 = r[second];
        const FreeWord wa = FreeWord::letter(a.generator, a.exponent);
        const FreeWord u = word_of(r.begin() + 1, r.begin() + static_cast<std::ptrdiff_t>(second));
        const FreeWord v = word_of(r.begin() + static_cast<std::ptrdiff_t>(second) + 1, r.end());

        RewriteStep s;
        if (a2.exponent == a.exponent) {
            // tr(AUAV) = tr(AU) tr(AV) - tr(U^-1 V)
            s.rule = Rule::RepeatSame;
            s.terms.push_back({1, {wa * u, wa * v}});
            s.terms.push_back({-1, {invert(u) * v}});
        } else {
            // tr(AUA^-1V) = tr(AU) tr(A^-1V) - tr(A^2 U V^-1), and
            // tr(A^2 X) = tr(A) tr(AX) - tr(X) with X = U V^-1.
            s.rule = Rule::RepeatOpposite;
            const FreeWord x = u * invert(v);
            s.terms.push_back({1, {wa * u, invert(wa) * v}});
            s.terms.push_back({-1, {wa, wa * x}});
            s.terms.push_back({1, {x}});
        }
        return s;
    }

    // R4: squarefree with an inverted letter; rotate it to the end.
    if (auto it = std::find_if(l.begin(), l.end(), [](const Syllable& x) { return x.exponent < 0; }); it != l.end()) {
        const Letters r = rotate_to(l, static_cast<std::size_t>(it - l.begin()) + 1);
        const Syllable a = inverse_letter(r.back());
        const FreeWord u = word_of(r.begin(), r.end() - 1);
        const FreeWord wa = FreeWord::letter(a.generator, a.exponent);

        RewriteStep s;
        s.rule = Rule::InverseElim;
        s.terms.push_back({1, {wa, u}});
        s.terms.push_back({-1, {u * wa}});
        return s;
    }

    // R5: first adjacent inversion W2 B A W1 with index(B) > index(A).
    for (std::size_t j = 0; j + 1 < l.size(); ++j) {
        if (l[j].generator < l[j + 1].generator) continue;
        const FreeWord w2 = word_of(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(j));
        const FreeWord b = FreeWord::letter(l[j].generator);
        const FreeWord a = FreeWord::letter(l[j + 1].generator);
        const FreeWord w1 = word_of(l.begin() + static_cast<std::ptrdiff_t>(j) + 2, l.end());
        const FreeWord w = w1 * w2;

        // tr(W2 B A W1) = tr(B) tr(A W) - tr(A) tr(W B^-1) + tr(AB) tr(W) - tr(W2 A B W1), W = W1 W2
        RewriteStep s;
        s.rule = Rule::Sort;
        s.terms.push_back({1, {b, a * w}});
        s.terms.push_back({-1, {a, w * invert(b)}});
        s.terms.push_back({1, {a * b, w}});
        s.terms.push_back({-1, {w2 * a * b * w1}});
        return s;
    }

    // R6
    std::vector<int> idx;
    for (const Syllable& x : l) idx.push_back(x.generator);
    return base(Rule::Sorted, TracePoly::variable(BasisVar(idx)));
}

const TracePoly& TraceReducer::reduce(const FreeWord& w, int n) {
    if (n < 0 || n > 63) throw Error(Errc::IndexOutOfRange, "generator count must be in [0, 63]");
    if (w.max_generator() > n) {
        throw Error(Errc::IndexOutOfRange, "word uses A" + std::to_string(w.max_generator()) +
                                               " but n = " + std::to_string(n));
    }
    return reduce(cyclic_canonical(w));
}

CyclicWord trace_class(const FreeWord& w) {
    CyclicWord x = cyclic_canonical(w);
    CyclicWord y = cyclic_canonical(invert(w));
    const ReductionMeasure mx = reduction_measure(x);
    const ReductionMeasure my = reduction_measure(y);
    if (my < mx || (my == mx && y < x)) return y;
    return x;
}

const TracePoly& TraceReducer::reduce(const CyclicWord& cw) {
    const CyclicWord w = trace_class(cw.representative());
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;

    const RewriteStep step = rewrite_step(w);
    TracePoly result;
    if (step.value) {
        result = *step.value;
    } else {
        for (const RewriteStep::Term& term : step.terms) {
            TracePoly product(term.coeff);
            for (const FreeWord& f : term.factors) product = product * reduce(trace_class(f));
            result += product;
        }
    }
    return cache_.emplace(w, std::move(result)).first->second;
}

TracePoly reduce_trace(const FreeWord& w, int n) {
    thread_local TraceReducer reducer;
    return reducer.reduce(w, n);
}

}  // namespace sl2trace
