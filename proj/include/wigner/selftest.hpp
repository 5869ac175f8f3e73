#pragma once

#include <string>
#include <vector>

namespace wigner {

struct SuiteResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string worst_case;  // input at which max_error occurred
    bool passed = false;
};

/// Runs every invariant suite (kinematic identities, linear-algebra
/// properties, reduction closed forms, Bell equivalences, sweep
/// determinism) at fixed grid resolutions and seeds. Deterministic.
std::vector<SuiteResult> run_selftest();

}  // namespace wigner
