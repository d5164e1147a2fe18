// Runs acceptance criteria 1-11 on the extended grid and prints one line per
// criterion. Exit status is nonzero if any criterion fails.

#include <cstdio>
#include <iostream>

#include "lrbq/verify.hpp"

int main() {
    lrbq::VerificationGrid grid;
    grid.extended = true;
    bool ok = true;
    lrbq::run_verification(grid, [&](const lrbq::CriterionResult& r) {
        ok = ok && r.pass();
        std::printf("criterion %2d: %s  %s (%zu checks, %.2fs)\n", r.id, r.pass() ? "PASS" : "FAIL", r.title.c_str(), r.checks.size(),
                    r.seconds);
        for (const auto& c : r.checks) {
            if (!c.pass) std::printf("    failed: %s expected %s, got %s\n", c.name.c_str(), c.expected.c_str(), c.actual.c_str());
        }
        std::fflush(stdout);
    });
    std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
    return ok ? 0 : 1;
}
