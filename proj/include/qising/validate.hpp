#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qising::validate {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The full acceptance suite; every tolerance is pinned in the implementation.
std::vector<CheckResult> run_all(std::uint64_t seed, int parallelism);

/// Classical subset (transfer-matrix oracle equivalence + trace identity).
std::vector<CheckResult> run_classical(std::uint64_t seed, int parallelism);

/// Prints one pass/fail line per check; returns true iff all passed.
bool report(const std::vector<CheckResult>& results);

}  // namespace qising::validate
