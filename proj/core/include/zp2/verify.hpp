#ifndef ZP2_VERIFY_HPP
#define ZP2_VERIFY_HPP

#include <string>
#include <vector>

#include "zp2/equivalence.hpp"

namespace zp2 {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    bool small_grid = false;  // trimmed parameters for a quick smoke run
    uint64_t seed = 20240405;
    size_t trials = 50;
    size_t workers = 1;
    bool enforce_time = true;
};

// The acceptance grid, one result per criterion.
CheckResult check_worked_example(const VerifyOptions& opt);         // 1
CheckResult check_oracle_vs_formula(const VerifyOptions& opt);      // 2
CheckResult check_self_dual_totals(const VerifyOptions& opt);       // 3
CheckResult check_free_lift_counts(const VerifyOptions& opt);       // 4
CheckResult check_fiber_structure(const VerifyOptions& opt);        // 5
CheckResult check_even_lift_counts(const VerifyOptions& opt);       // 6
CheckResult check_type2_totals(const VerifyOptions& opt);           // 7
CheckResult check_map_images(const VerifyOptions& opt);             // 8
CheckResult check_structural_invariants(const VerifyOptions& opt);  // 9

std::vector<CheckResult> run_verification(const VerifyOptions& opt);

// Single-statement drivers exposed through the command line: lemma is one
// of 3.1, 3.2, 4.2, 4.5, 5.3, 5.6, 5.7.
CheckResult check_lemma(const std::string& lemma, uint32_t p, size_t m, size_t n,
                        size_t trials, uint64_t seed);

}  // namespace zp2

#endif
