#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptband/model.hpp"

namespace ptband {

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

struct CheckOptions {
    std::uint64_t seed = 12345;
    int cases = 20; ///< random parameter sets per randomized suite
};

/// Runs the invariant suites (symmetries, spectrum vs dense
/// diagonalization, commutator families, completeness, engine equivalence,
/// norm theorems, eta symmetry, counterpart matching, Jordan-block
/// detection) at the given parameters plus seeded random sweeps.
std::vector<CheckResult> run_checks(const ModelParams& params,
                                    const CheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

} // namespace ptband
