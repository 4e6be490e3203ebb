#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace sl2trace {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    double max_error = 0.0;
    nlohmann::json failure;  // null when passed; otherwise the offending input
};

struct SelftestReport {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;

    bool passed() const;
    /// Deterministic JSON rendering: identical seeds give identical bytes.
    std::string render() const;
};

/// Runs the property suites of every module from one seeded generator.
SelftestReport run_selftest(std::uint64_t seed);

}  // namespace sl2trace
