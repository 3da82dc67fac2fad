// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Run with --quick for reduced grids.
#include "dirlab/selftest.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    dirlab::SelfTestOptions options;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
        if (std::strcmp(argv[i], "--mutate-douglas") == 0)
            options.mutate_douglas_prefactor = true;
    }
    const auto results = dirlab::run_selftest(options);
    for (const auto& r : results)
        std::printf("criterion %2d [%s]: %s (%.1fs) -- %s\n", r.id,
                    r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
    const bool ok = dirlab::all_passed(results);
    std::printf("acceptance: %s\n", ok ? "ALL PASS" : "FAILURES PRESENT");
    return ok ? 0 : 1;
}
