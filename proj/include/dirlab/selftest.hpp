#ifndef DIRLAB_SELFTEST_HPP
#define DIRLAB_SELFTEST_HPP

#include <string>
#include <vector>

namespace dirlab {

struct SelfTestOptions {
    bool quick = false; // reduced grids and corpus; verdicts must not change
    // Debug mutation: deliberately corrupt the Douglas prefactor so the
    // exactness criterion must fail.  Verifies the suite can fail at all.
    bool mutate_douglas_prefactor = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail; // worst observed deviation or the failing sub-check
    double seconds = 0.0;
};

/// Runs the ten acceptance criteria in order.  Never throws for a numerical
/// failure (that becomes passed = false); throws only on internal errors.
std::vector<CriterionResult> run_selftest(const SelfTestOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace dirlab

#endif
