#include "sl2trace/relator.hpp"

#include <cmath>
#include <utility>

#include "sl2trace/reduce.hpp"

namespace sl2trace {

namespace {

std::pair<Complex, Complex> horner_with_derivative(const std::vector<Complex>& coeffs, Complex x) {
    Complex f = 0.0;
    Complex df = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        df = df * x + f;
        f = f * x + *it;
    }
    return {f, df};
}

Complex second_derivative(const std::vector<Complex>& coeffs, Complex x) {
    Complex out = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 2;) out = out * x + static_cast<double>(k * (k - 1)) * coeffs[k];
    return out;
}

}  // namespace

RelatorEquation RelatorEquation::make(const FreeWord& word, RelatorSign sign, BasisVar target, TraceValues fixed) {
    RelatorEquation eq;
    eq.word = word;
    eq.sign = sign;
    eq.poly = reduce_trace(word, std::max(word.max_generator(), target.max_index()));
    eq.target = target;
    if (!eq.poly.contains(target)) {
        throw Error(Errc::TargetAbsent, target.name() + " does not occur in tr(" + format_word(word) + ")");
    }
    for (BasisVar v : eq.poly.variables()) {
        if (v != target && !fixed.contains(v)) throw Error(Errc::MissingVariable, "no value for " + v.name());
    }
    fixed.erase(target);
    eq.fixed = std::move(fixed);
    return eq;
}

TracePoly differentiate(const TracePoly& p, BasisVar v) {
    TracePoly out;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.exponent_of(v);
        if (e == 0) continue;
        out += TracePoly::term(c * e, m.without_one(v));
    }
    return out;
}

std::vector<Complex> restrict_to(const TracePoly& p, BasisVar target, const TraceValues& fixed) {
    std::vector<Complex> coeffs;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.exponent_of(target);
        if (coeffs.size() <= e) coeffs.resize(e + 1, 0.0);
        Complex value = c.get_d();
        for (const auto& [v, k] : m.factors()) {
            if (v == target) continue;
            auto it = fixed.find(v);
            if (it == fixed.end()) throw Error(Errc::MissingVariable, "no value for " + v.name());
            for (unsigned j = 0; j < k; ++j) value *= it->second;
        }
        coeffs[e] += value;
    }
    return coeffs;
}

LocalSolution solve_for_variable(const RelatorEquation& eq, Complex initial_guess, const NewtonOptions& opts) {
    if (!eq.poly.contains(eq.target)) throw Error(Errc::TargetAbsent, eq.target.name() + " does not occur");
    std::vector<Complex> coeffs = restrict_to(eq.poly, eq.target, eq.fixed);
    if (coeffs.empty()) coeffs.push_back(0.0);
    coeffs[0] -= sign_value(eq.sign);

    Complex x = initial_guess;
    for (int iter = 0; iter <= opts.max_iter; ++iter) {
        const auto [f, df] = horner_with_derivative(coeffs, x);
        const bool small_step = df != 0.0 && std::abs(f / df) <= opts.step_tol * (1.0 + std::abs(x));
        if (std::abs(f) <= opts.tol && (f == 0.0 || df == 0.0 || small_step)) {
            // A root whose |f| <= tol neighbourhood reaches a critical point
            // is numerically a multiple root, even if roundoff left f' > 0.
            const double curvature = std::abs(second_derivative(coeffs, x));
            if (std::abs(df) <= opts.proviso_tol || std::norm(df) <= 2.0 * curvature * opts.tol) {
                throw ZeroDerivativeError(x, df);
            }
            return {x, std::abs(f), df, iter};
        }
        if (df == 0.0 || iter == opts.max_iter) break;

        const Complex step = f / df;
        double damping = 1.0;
        Complex next = x - step;
        for (int h = 0; h < opts.max_halvings; ++h) {
            if (std::abs(horner_with_derivative(coeffs, next).first) < std::abs(f)) break;
            damping *= 0.5;
            next = x - damping * step;
        }
        x = next;
    }
    throw NoConvergenceError(x, std::abs(horner_with_derivative(coeffs, x).first));
}

std::map<BasisVar, Complex> proviso_scan(const TracePoly& p, const TraceValues& values) {
    std::map<BasisVar, Complex> out;
    for (const auto& [v, value] : values) out.emplace(v, 0.0);
    for (BasisVar v : p.variables()) out[v] = evaluate_poly(differentiate(p, v), values);
    return out;
}

}  // namespace sl2trace
