#include "sl2trace/homcheck.hpp"

#include <algorithm>
#include <cmath>

#include "sl2trace/normalize.hpp"
#include "sl2trace/random.hpp"
#include "sl2trace/reconstruct.hpp"
#include "sl2trace/tracepoly.hpp"

namespace sl2trace {

namespace {

TraceCheck compare_on(const HomCandidate& c, const std::vector<FreeWord>& words, const Tolerances& tol) {
    TraceCheck out;
    for (const FreeWord& w : words) {
        const Complex td = evaluate_word(w, c.domain).trace();
        const Complex ti = evaluate_word(w, c.image).trace();
        ++out.checked_words;
        if (!traces_agree(td, ti, tol)) {
            out.preserving = false;
            out.witness = w;
            out.domain_trace = td;
            out.image_trace = ti;
            return out;
        }
    }
    return out;
}

bool free_pair(const Mat2C& x, const Mat2C& y, const Tolerances& tol) {
    if (is_plus_minus_identity(x, tol.entry) || is_plus_minus_identity(y, tol.entry)) return false;
    return !shares_fixed_point(x, y, tol);
}

// Generators first, then products A_i A_j (i < j).
std::vector<FreeWord> frame_candidates(int n) {
    std::vector<FreeWord> out;
    for (int i = 1; i <= n; ++i) out.push_back(FreeWord::letter(i));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) out.push_back(FreeWord{{i, 1}, {j, 1}});
    }
    return out;
}

bool certificate_holds(const HomCandidate& c, const Mat2C& a, const Tolerances& tol) {
    const Mat2C ainv = inverse(a);
    for (std::size_t i = 0; i < c.domain.size(); ++i) {
        const double err = max_entry_distance(a * c.domain[i] * ainv, c.image[i]);
        if (err > 10.0 * tol.entry * (1.0 + max_entry(c.image[i]))) return false;
    }
    return true;
}

}  // namespace

HomCandidate HomCandidate::make(std::vector<Mat2C> domain, std::vector<Mat2C> image, std::vector<FreeWord> relators,
                                const Tolerances& tol) {
    if (domain.empty()) throw Error(Errc::Schema, "candidate needs at least one generator");
    if (domain.size() != image.size()) {
        throw Error(Errc::Schema, "domain has " + std::to_string(domain.size()) + " generators, image has " +
                                      std::to_string(image.size()));
    }
    for (const FreeWord& r : relators) {
        if (!is_plus_minus_identity(evaluate_word(r, domain), tol.entry)) {
            throw Error(Errc::Schema, "relator '" + format_word(r) + "' is not +-I in the domain");
        }
    }
    return HomCandidate{std::move(domain), std::move(image), std::move(relators)};
}

const char* verdict_name(VerdictKind k) noexcept {
    switch (k) {
        case VerdictKind::Conjugation: return "Conjugation";
        case VerdictKind::TracePreservingDegenerate: return "TracePreservingDegenerate";
        case VerdictKind::TraceViolation: return "TraceViolation";
    }
    return "?";
}

bool traces_agree(Complex x, Complex y, const Tolerances& tol) {
    return std::abs(x - y) <= tol.trace * (1.0 + std::abs(x));
}

TraceCheck check_trace_preserving(const HomCandidate& c, CheckMode mode, const Tolerances& tol) {
    std::vector<FreeWord> words;
    if (mode == CheckMode::BasisWords) {
        for (BasisVar v : basis_for(c.n())) words.push_back(basis_word(v));
    } else {
        if (c.n() >= 2) {
            if (!free_pair(c.image[0], c.image[1], tol)) {
                throw Error(Errc::SharedFixedPoint, "image A1, A2 share a fixed point");
            }
        }
        for (BasisVar v : coordinate_keys(c.n())) words.push_back(basis_word(v));
    }
    return compare_on(c, words, tol);
}

HomVerdict classify(const HomCandidate& c, const Tolerances& tol) {
    HomVerdict v;
    const TraceCheck check = check_trace_preserving(c, CheckMode::BasisWords, tol);
    v.checked_words = check.checked_words;
    if (!check.preserving) {
        v.kind = VerdictKind::TraceViolation;
        v.witness = check.witness;
        return v;
    }

    const std::vector<FreeWord> cands = frame_candidates(c.n());
    for (std::size_t i = 0; i < cands.size(); ++i) {
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
            const Mat2C du = evaluate_word(cands[i], c.domain);
            const Mat2C dv = evaluate_word(cands[j], c.domain);
            const Mat2C iu = evaluate_word(cands[i], c.image);
            const Mat2C iv = evaluate_word(cands[j], c.image);
            const bool dfree = free_pair(du, dv, tol);
            const bool ifree = free_pair(iu, iv, tol);
            v.domain_has_free_pair = v.domain_has_free_pair || dfree;
            v.image_has_free_pair = v.image_has_free_pair || ifree;
            if (!dfree || !ifree) continue;
            Mat2C a;
            try {
                a = conjugator_between(du, dv, iu, iv, tol);
            } catch (const TraceMismatchError&) {
                continue;
            }
            if (!certificate_holds(c, a, tol)) continue;
            v.kind = VerdictKind::Conjugation;
            v.certificate = a;
            v.frame_words = std::make_pair(cands[i], cands[j]);
            return v;
        }
    }
    v.kind = VerdictKind::TracePreservingDegenerate;
    return v;
}

std::vector<RelatorReport> check_relators(const HomCandidate& c) {
    std::vector<RelatorReport> out;
    const Mat2C id;
    for (const FreeWord& r : c.relators) {
        const Mat2C m = evaluate_word(r, c.image);
        out.push_back({r, std::min(max_entry_distance(m, id), max_entry_distance(m, -id)), m.trace()});
    }
    return out;
}

TraceCheck empirical_trace_check(const HomCandidate& c, std::size_t count, std::size_t max_len, std::uint64_t seed,
                                 const Tolerances& tol) {
    Rng rng(seed);
    std::vector<FreeWord> words;
    words.reserve(count);
    for (std::size_t k = 0; k < count; ++k) words.push_back(random_word(rng, c.n(), max_len));
    return compare_on(c, words, tol);
}

ConjugationCheck empirical_conjugation_check(const HomCandidate& c, const Mat2C& certificate, std::size_t count,
                                             std::size_t max_len, std::uint64_t seed) {
    Rng rng(seed);
    ConjugationCheck out;
    const Mat2C ainv = inverse(certificate);
    for (std::size_t k = 0; k < count; ++k) {
        const FreeWord w = random_word(rng, c.n(), max_len);
        const Mat2C target = evaluate_word(w, c.image);
        const double err =
            max_entry_distance(certificate * evaluate_word(w, c.domain) * ainv, target) / (1.0 + max_entry(target));
        ++out.checked_words;
        if (err > out.max_error || !out.worst) {
            out.max_error = std::max(out.max_error, err);
            out.worst = w;
        }
    }
    return out;
}

}  // namespace sl2trace
