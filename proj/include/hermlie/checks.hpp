#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hermlie::checks {

struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

CheckResult table1_consistency();       // structure-constant identities, full sweep
CheckResult degree_lemma();             // dim polynomial degree = a1 + 4 b1 + 2
CheckResult gk_dimensions();            // growth exponents match the closed forms
CheckResult orbit_matching();           // associated varieties and next-to-minimal lists
CheckResult spectral_endpoint();        // kernel at nu0, positivity inside the window
CheckResult branching_goldens();        // so(2,n) branching vs independent construction
CheckResult e6_suite();                 // root identities, interlacing, exclusion search

/// Module invariants under a seeded random driver; count = randomized cases
/// per property.
std::vector<CheckResult> property_checks(unsigned seed, int count);

/// Criteria 1-7 plus the seeded property suite.
std::vector<CheckResult> run_all(unsigned seed = 20240801, int property_cases = 200);

nlohmann::json to_json(const std::vector<CheckResult>& results);

}  // namespace hermlie::checks
