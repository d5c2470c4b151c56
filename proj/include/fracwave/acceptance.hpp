#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fracwave {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;   // measured values alongside the applied thresholds
};

/// Runs the full check suite. tol_scale multiplies every error tolerance
/// (0.01 means 100x stricter); runtime budgets and strict-separation
/// bounds stay fixed. A criterion that throws is reported as failed with
/// the exception text.
std::vector<CriterionResult> run_acceptance(double tol_scale = 1.0);

/// ids and names in run order, without running anything.
std::vector<std::pair<int, std::string>> acceptance_list();

} // namespace fracwave
