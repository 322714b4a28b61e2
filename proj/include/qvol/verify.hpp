#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qvol {

struct FamilyResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;  // empty when the family passed

    bool passed() const { return failures == 0; }
};

struct SuiteReport {
    std::vector<FamilyResult> families;

    bool all_pass() const {
        for (const auto& f : families) {
            if (!f.passed()) return false;
        }
        return true;
    }
    std::uint64_t total_checks() const {
        std::uint64_t t = 0;
        for (const auto& f : families) t += f.checks;
        return t;
    }
};

// Exercises every exact identity the closed form satisfies — duality,
// recursion, the dual Cauchy expansion of the denominator, partial-fraction
// equivalence, the two product/substitution identities of the denominator,
// base values, homogeneity, and the 0 <= S <= D range — at `trials` random
// positive rational points for each (p, q) up to the given bounds.
// Counterexamples are echoed with exact inputs. `inject_fault` flips one
// duality check (negative control for the exit-status contract).
SuiteReport run_identity_suite(unsigned pmax, unsigned qmax, unsigned trials, std::uint64_t seed,
                               bool inject_fault = false);

}  // namespace qvol
