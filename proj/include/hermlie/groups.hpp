#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermlie/rootsys.hpp"

namespace hermlie {

enum class Case { su, so2n, sostar, e6, e7 };

std::string case_name(Case c);

/// One Hermitian case with its structure constants and derived quantities.
/// su(p,q) stores two b-values (p-2, q-2) with a1 = 0; every other case has a
/// single b1.  rho = d1 + 1 always; nu0 = a1 + 1 except for su(p,q), where it
/// is 1 for p - q even and absent for p - q odd.
struct GroupDatum {
    Case cs;
    int p = 0, q = 0;  // su only
    int n = 0;         // so(2,n) and so*(2n)
    int a1 = 0;
    int b1 = 0;                  // single b-value (non-su)
    std::pair<int, int> b1_su;   // (p-2, q-2) for su
    int d1 = 0;
    int rho = 0;
    std::optional<int> nu0;

    std::string name() const;
    bool is_su() const { return cs == Case::su; }
};

GroupDatum datum_su(int p, int q);
GroupDatum datum_so2n(int n);      // so(2,n), n >= 5
GroupDatum datum_sostar(int n);    // so*(2n), n >= 4
GroupDatum datum_e6();
GroupDatum datum_e7();

/// CLI-facing constructor; params as in the subcommand grammar.
GroupDatum group_datum(const std::string& case_label, const std::vector<int>& params);

/// Every case touched by the verification sweeps.
std::vector<GroupDatum> table1_sweep();

}  // namespace hermlie
