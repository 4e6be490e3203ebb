#include "sl2trace/error.hpp"

namespace sl2trace {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::Syntax: return "SyntaxError";
        case Errc::Index: return "IndexError";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::InvalidMatrix: return "InvalidMatrix";
        case Errc::IdentityArgument: return "IdentityArgument";
        case Errc::SharedFixedPoint: return "SharedFixedPoint";
        case Errc::TraceMismatch: return "TraceMismatch";
        case Errc::DegenerateFrame: return "DegenerateFrame";
        case Errc::ParabolicA1: return "ParabolicA1";
        case Errc::SharedFixedPointData: return "SharedFixedPointData";
        case Errc::InconsistentCoordinates: return "InconsistentCoordinates";
        case Errc::AllParabolic: return "AllParabolic";
        case Errc::MissingVariable: return "MissingVariable";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::ZeroDerivativeAtSolution: return "ZeroDerivativeAtSolution";
        case Errc::TargetAbsent: return "TargetAbsent";
        case Errc::Schema: return "SchemaError";
    }
    return "UnknownError";
}

}  // namespace sl2trace
