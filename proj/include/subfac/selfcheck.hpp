#pragma once

#include <string>
#include <vector>

#include "subfac/ghj.hpp"

namespace subfac {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Golden acceptance suite: nine independent checks over known-answer
// configurations.  `level_cap` bounds the principal-graph recursions; a cap
// too small for stabilization fails those checks with a "not stabilized"
// detail rather than aborting the suite.
std::vector<CheckResult> run_acceptance_suite(int level_cap = kGhjLevelCap);

}  // namespace subfac
