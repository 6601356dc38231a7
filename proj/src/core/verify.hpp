#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nuplus {

struct VerifySuiteResult {
    std::string suite;
    bool passed;
    std::string detail;  // range swept on success, counterexample on failure
};

// Runs every property suite. max_p (>= 2) scales the lens-space sweeps; seed
// feeds the randomized suites. All suites always run; failures are reported,
// not thrown.
std::vector<VerifySuiteResult> run_verify(std::int64_t max_p, std::uint64_t seed);

bool verify_all_passed(const std::vector<VerifySuiteResult>& results);

} // namespace nuplus
