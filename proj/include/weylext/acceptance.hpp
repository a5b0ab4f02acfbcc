#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylext/calibration.hpp"

namespace weylext::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    cal::Record record;            // calibrated conventions (required)
    std::string reference_csv;     // golden data for the p=3, q=2 block
    std::uint64_t seed = 0x5eed;   // randomized property tests
    FieldMode mode = FieldMode::Both;
};

CriterionResult golden_match(const Options& opt);          // 1
CriterionResult oracle_equivalence(const Options& opt);    // 2
CriterionResult cycle_certificates(const Options& opt);    // 3
CriterionResult bimodule_identities(const Options& opt);   // 4
CriterionResult algebraic_properties(const Options& opt);  // 5
CriterionResult field_robustness(const Options& opt);      // 6

std::vector<CriterionResult> run_all(const Options& opt);

}  // namespace weylext::acceptance
