#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2trace::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,  // parse, schema and input errors
    kInconsistentCoordinates = 2,
    kDegenerate = 3,
    kViolation = 4,
    kZeroDerivative = 5,
    kDomainError = 6,  // any other domain error
    kSelftestFailed = 7,
};

/// Runs one invocation. JSON results go to `out`; errors are a single JSON
/// object on `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sl2trace::cli
