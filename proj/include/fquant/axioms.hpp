#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fquant {

/// Result of one law check. `passed` reflects the check's own acceptance
/// rule (for the sabotage check, "passed" means the violation WAS detected).
struct CheckReport {
    std::string name;
    std::string suite;  // "Z" or "P"
    bool passed = false;
    bool skipped = false;     // set when the configuration makes the check vacuous
    double max_violation = 0.0;
    double tolerance = 0.0;
    std::size_t instances = 0;
    std::vector<std::string> witnesses;  // first few offending instances
};

/// Shared knobs for the suite. Instances are exhaustive over crisp tuples up
/// to max_m and randomized over fuzzy tuples (grades quantized to multiples
/// of 0.05 so witnesses reproduce exactly from the report).
struct CheckConfig {
    std::size_t max_m = 4;
    std::size_t probes = 50;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
};

// Laws the fuzzification scheme must satisfy, verified numerically against
// the exact evaluator at desk scale.
CheckReport check_Z1_correct_generalization(const CheckConfig& cfg = {});
CheckReport check_Z2_projection(const CheckConfig& cfg = {});
CheckReport check_Z3_dualisation(const CheckConfig& cfg = {});
CheckReport check_Z4_internal_joins(const CheckConfig& cfg = {});
CheckReport check_Z5_monotonicity(const CheckConfig& cfg = {});
CheckReport check_Z6_functional_application(const CheckConfig& cfg = {});
CheckReport check_external_internal_negation(const CheckConfig& cfg = {});
CheckReport check_quantifier_monotonicity(const CheckConfig& cfg = {});
CheckReport check_continuity_bounds(const CheckConfig& cfg = {});
CheckReport check_fuzzy_arg_insertion(const CheckConfig& cfg = {});
CheckReport check_identity_averaging(const CheckConfig& cfg = {});
CheckReport check_ruspini_probabilistic(const CheckConfig& cfg = {});

/// Discrimination guard: re-runs the internal-joins law with the induced
/// product t-norm replaced by min. The law must now break visibly
/// (max_violation >= 1e-3), proving the suite can actually tell the
/// operators apart. `passed` means the violation was detected.
CheckReport check_Z4_discrimination_min_tnorm(const CheckConfig& cfg = {});

/// All checks, in a fixed order. `suite` filters: "all", "Z" or "P".
std::vector<CheckReport> run_checks(const CheckConfig& cfg = {}, const std::string& suite = "all");

}  // namespace fquant
