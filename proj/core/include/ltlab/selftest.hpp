#pragma once

// The acceptance suite: one function per criterion, each returning a
// pass/fail result with a human-readable detail line. Used by the `selftest`
// CLI subcommand and by the acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

namespace ltlab {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

CheckResult check_honda_integrality(std::uint64_t seed);   // criterion 1
CheckResult check_fgl_axioms();                            // criterion 2
CheckResult check_division_algebra(std::uint64_t seed);    // criterion 3
CheckResult check_hopf_suite();                            // criterion 4
CheckResult check_numerics(std::uint64_t seed);            // criterion 5
CheckResult check_flat_connections(std::uint64_t seed);    // criterion 6
CheckResult check_cocycle(std::uint64_t seed);             // criterion 7

// Criteria 1-7 in order.
std::vector<CheckResult> run_acceptance(std::uint64_t seed);

}  // namespace ltlab
