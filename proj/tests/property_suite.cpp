// Standalone property runner: every module invariant under a seeded random
// driver, at least 200 cases per randomized property.
#include <cstdio>
#include <cstdlib>

#include "hermlie/checks.hpp"

int main(int argc, char** argv) {
    unsigned seed = 20240801;
    int cases = 200;
    if (argc > 1) seed = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));
    if (argc > 2) cases = std::atoi(argv[2]);

    bool ok = true;
    for (const auto& r : hermlie::checks::property_checks(seed, cases)) {
        std::printf("[%s] %-4s %-34s %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    r.name.c_str(), r.pass ? r.detail.c_str() : r.detail.c_str());
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
