#pragma once

#include "lhs/diagnostics.hpp"

#include <string>
#include <vector>

namespace lhs {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;  // the quantity that was bounded
    double tolerance = 0.0; // the bound it must satisfy
};

// Quick versions of the invariant batteries, sized to run in a few seconds.
std::vector<CheckResult> verify_invariants();
std::vector<CheckResult> verify_reductions();
std::vector<CheckResult> verify_theorems();

// Deterministic random skew-hermitian matrix, used by several suites.
CMat random_skew_hermitian(std::size_t n, std::uint64_t seed, double scale = 1.0);

} // namespace lhs
