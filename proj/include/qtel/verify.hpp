// SPDX-License-Identifier: Apache-2.0
//
// The seeded property suite behind `verify`: every module invariant that is
// phrased over random inputs, plus the fixed-grid oracle-equivalence checks.
// Identical (seed, trials) pairs produce identical results.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtel {

struct VerifyConfig {
    std::uint64_t seed = 0;
    int trials = 1;
};

struct PropertyResult {
    std::string name;
    double worst_residual = 0.0; // largest violation/deviation observed
    double tolerance = 0.0;
    bool pass = false;
};

/// Run the full suite. Randomized properties draw `trials` cases each;
/// grid-based properties use their fixed grids.
std::vector<PropertyResult> run_property_suite(const VerifyConfig& cfg);

/// One line per property plus a final tally; stable formatting so equal
/// configurations give byte-identical summaries.
std::string format_verify_summary(const std::vector<PropertyResult>& results);

} // namespace qtel
