// Acceptance battery: runs every claim in the built-in list and prints one
// pass/fail line per claim. Exit 0 only when everything passes.

#include <chrono>
#include <cstdio>
#include <exception>

#include "robustnet/claims.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    int failures = 0;
    for (const robustnet::Claim& claim : robustnet::paper_claims()) {
        const auto start = clock::now();
        robustnet::ClaimResult result;
        try {
            result = claim.run();
        } catch (const std::exception& e) {
            result.passed = false;
            result.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(clock::now() - start).count();
        std::printf("[%s] %-28s %6.2fs  %s\n", result.passed ? "PASS" : "FAIL",
                    claim.name.c_str(), secs, result.detail.c_str());
        std::fflush(stdout);
        if (!result.passed) ++failures;
    }
    if (failures) std::printf("%d claim(s) failed\n", failures);
    return failures ? 1 : 0;
}
