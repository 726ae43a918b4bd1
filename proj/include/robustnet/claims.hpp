#pragma once

#include <functional>
#include <string>
#include <vector>

namespace robustnet {

struct ClaimResult {
    bool passed = false;
    std::string detail;
};

struct Claim {
    std::string name;
    std::string summary;
    std::function<ClaimResult()> run;
};

/// The built-in `paper-claims` battery: one entry per acceptance criterion,
/// each self-contained and deterministic.
const std::vector<Claim>& paper_claims();

/// Lookup by name; nullptr when absent.
const Claim* find_claim(const std::string& name);

}  // namespace robustnet
