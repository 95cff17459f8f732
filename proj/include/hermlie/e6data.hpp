#pragma once

#include <array>
#include <string>
#include <vector>

#include "hermlie/rootsys.hpp"

namespace hermlie {

/// Root data around the Heisenberg parabolic of e6(-14): the strongly
/// orthogonal cascades, the simple roots beta_1..beta_5 of the Levi part
/// (an sl(6)), their fundamental weights, and the weights of the degree-one
/// nilradical piece V_1.
struct E6Data {
    RootSystem sys;                  // E6 with the hermitian split
    Weight gamma1, gamma2;           // lowest cascade
    Weight tgamma1, tgamma2;         // highest cascade
    std::vector<Weight> beta;        // simple roots of the Levi sl(6), beta[4] = gamma2
    std::vector<Weight> lambda;      // fundamental weights dual to beta
    Weight delta0;                   // lowest weight of V_1
    std::vector<Weight> v1_weights;  // the ten weights of V_1
};

const E6Data& e6_structure();

/// Express a Levi weight in sl(6) standard coordinates (traceless 6-tuple),
/// via its pairings with beta_1..beta_5.
std::array<Rat, 6> to_sl6_standard(const Weight& w);

struct IdentityCheck {
    std::string name;
    bool pass;
    std::string detail;
};

/// Exact verification of the e6 root-data identities; one entry per identity.
std::vector<IdentityCheck> verify_e6_identities();

}  // namespace hermlie
