#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "parkpose/permutation.hpp"

namespace parkpose {

enum class Tier { Fast, Slow };

struct CheckResult {
    std::string name;
    int n_used = 0;
    bool passed = false;
    std::string detail;  // first counterexample on failure, summary on success
};

struct VerificationReport {
    int requested_n = 0;
    int n = 0;  // after tier clamping
    Tier tier = Tier::Fast;
    std::vector<CheckResult> checks;  // ordered by check name
    std::chrono::milliseconds elapsed{0};
    bool all_passed() const;
};

using ReachablePredicate =
    std::function<bool(const Permutation&, const Permutation&)>;

CheckResult check_ar_count(int n);
CheckResult check_ar_downset(int n);
CheckResult check_ar_equivalence(int n);
CheckResult check_bruhat_property(int n);
CheckResult check_completion_count(int n);
CheckResult check_criterion_equivalence(int n);
// Variant with an injectable reachability predicate, used as a negative
// control: a mutated predicate must make the check fail.
CheckResult check_criterion_equivalence(int n, const ReachablePredicate& reachable);
CheckResult check_fiber_sum(int n);
CheckResult check_gradedness(int n);
CheckResult check_ipf_count(int n);
CheckResult check_lambda_roundtrip(int n);
CheckResult check_prop33_facts(int n);
CheckResult check_sandwich(int n);
CheckResult check_sorting_coincidence(int n);
CheckResult check_thm_213(int n);
CheckResult check_thm_ar(int n);
CheckResult check_weak_implies_reachable(int n);

// Runs every named check at min(n, per-check cap) for the tier.  Check
// failures are report content, never exceptions.
VerificationReport run_verification(int n, Tier tier = Tier::Fast);

}  // namespace parkpose
