#pragma once

#include <map>
#include <vector>

#include "sl2trace/tracepoly.hpp"
#include "sl2trace/word.hpp"

namespace sl2trace {

enum class RelatorSign { Plus2, Minus2 };

inline double sign_value(RelatorSign s) { return s == RelatorSign::Plus2 ? 2.0 : -2.0; }

/// tr(W) = +-2 viewed as an equation in one basis trace, the others fixed.
struct RelatorEquation {
    FreeWord word;
    RelatorSign sign = RelatorSign::Plus2;
    TracePoly poly;
    BasisVar target;
    TraceValues fixed;

    /// Reduces the word's trace. Throws Errc::TargetAbsent if the target does
    /// not occur in the polynomial and Errc::MissingVariable if some other
    /// variable has no fixed value.
    static RelatorEquation make(const FreeWord& word, RelatorSign sign, BasisVar target, TraceValues fixed);
};

struct NewtonOptions {
    double tol = 1e-12;         // |f| at the solution
    double step_tol = 1e-10;    // relative size of the final step
    double proviso_tol = 1e-8;  // |f'| below this is not a chart point
    int max_iter = 60;
    int max_halvings = 8;
};

struct LocalSolution {
    Complex value;
    double residual = 0.0;
    Complex derivative;
    int iterations = 0;
};

/// Exact formal partial derivative.
TracePoly differentiate(const TracePoly& p, BasisVar v);

/// Coefficients c_k of the single-variable restriction sum_k c_k x^k.
std::vector<Complex> restrict_to(const TracePoly& p, BasisVar target, const TraceValues& fixed);

/// Damped complex Newton iteration on the restriction. Throws
/// NoConvergenceError or ZeroDerivativeError (|f'| <= proviso_tol at the root,
/// or |f'|^2 <= 2|f''| tol, which marks a numerically multiple root).
LocalSolution solve_for_variable(const RelatorEquation& eq, Complex initial_guess, const NewtonOptions& opts = {});

/// Every partial derivative of p evaluated at the point; variables of the
/// point that p does not use map to zero.
std::map<BasisVar, Complex> proviso_scan(const TracePoly& p, const TraceValues& values);

}  // namespace sl2trace
