#pragma once

#include <optional>
#include <string>

#include "transforms.hpp"

namespace weyldft {

struct CheckResult {
    std::string name;
    bool pass = false;
    double deviation = 0.0;  // measured worst-case error (0 for exact checks)
    std::string note;
};

struct VerifyOptions {
    Int weyl_cap = kDefaultWeylCap;
    bool relaxed = false;
    // Test hook: overwrite eps at one grid point before running the
    // numeric checks, to prove the suite notices corrupted data.
    std::optional<std::pair<std::size_t, Int>> corrupt_eps;
    unsigned long long rng_seed = 20240815ull;
    int random_trials = 10;
};

// Runs the full property suite for one (algebra, sigma, M).  Transform
// checks are skipped (with a note) when the Weyl group exceeds the cap.
std::vector<CheckResult> verify_config(const RootSystemData& R, SignHom sigma, Int M,
                                       const VerifyOptions& opt = {});

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace weyldft
