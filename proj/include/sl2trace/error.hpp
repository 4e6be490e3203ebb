#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sl2trace {

/// Stable error codes. The names are part of the CLI's JSON error contract.
enum class Errc {
    Syntax,
    Index,
    IndexOutOfRange,
    InvalidMatrix,
    IdentityArgument,
    SharedFixedPoint,
    TraceMismatch,
    DegenerateFrame,
    ParabolicA1,
    SharedFixedPointData,
    InconsistentCoordinates,
    AllParabolic,
    MissingVariable,
    NoConvergence,
    ZeroDerivativeAtSolution,
    TargetAbsent,
    Schema,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(Errc::Syntax, what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Which of the three pair traces disagreed.
enum class MismatchedTrace { G1, G2, G1G2 };

class TraceMismatchError : public Error {
public:
    TraceMismatchError(MismatchedTrace which, const std::string& what)
        : Error(Errc::TraceMismatch, what), which_(which) {}
    MismatchedTrace which() const noexcept { return which_; }

private:
    MismatchedTrace which_;
};

class InconsistentCoordinatesError : public Error {
public:
    InconsistentCoordinatesError(int generator, double residual)
        : Error(Errc::InconsistentCoordinates,
                "coordinates not realizable: generator A" + std::to_string(generator) +
                    " has determinant residual " + std::to_string(residual)),
          generator_(generator), residual_(residual) {}
    int generator() const noexcept { return generator_; }
    double residual() const noexcept { return residual_; }

private:
    int generator_;
    double residual_;
};

class NoConvergenceError : public Error {
public:
    NoConvergenceError(std::complex<double> last, double residual)
        : Error(Errc::NoConvergence, "Newton iteration did not converge (residual " +
                                         std::to_string(residual) + ")"),
          last_(last), residual_(residual) {}
    std::complex<double> last_iterate() const noexcept { return last_; }
    double residual() const noexcept { return residual_; }

private:
    std::complex<double> last_;
    double residual_;
};

class ZeroDerivativeError : public Error {
public:
    ZeroDerivativeError(std::complex<double> solution, std::complex<double> derivative)
        : Error(Errc::ZeroDerivativeAtSolution,
                "solution found but the partial derivative vanishes there"),
          solution_(solution), derivative_(derivative) {}
    std::complex<double> solution() const noexcept { return solution_; }
    std::complex<double> derivative() const noexcept { return derivative_; }

private:
    std::complex<double> solution_;
    std::complex<double> derivative_;
};

}  // namespace sl2trace
