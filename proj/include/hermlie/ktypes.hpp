#pragma once

#include <vector>

#include "hermlie/groups.hpp"
#include "hermlie/rootsys.hpp"

namespace hermlie::ktypes {

/// K-type label: coefficients along the two strongly orthogonal restricted
/// roots plus the central-character slot.  mu1 = mu2 = ell mod 2 always.
struct KType {
    long mu1;
    long mu2;
    long ell;
    friend bool operator==(const KType&, const KType&) = default;
    friend auto operator<=>(const KType& a, const KType& b) = default;
};

enum class Rep { pi_nu, pi_ntm };

enum class Execution { serial, parallel };

bool valid_ktype(const GroupDatum& d, Rep rep, const KType& kt);

/// All K-types of the given representation with max(mu1, mu2) <= cutoff,
/// sorted by (mu1, mu2, ell), each exactly once.
std::vector<KType> enumerate_ktypes(const GroupDatum& d, Rep rep, long cutoff);

/// Exact Weyl dimension product over the positive roots; the highest weight
/// must be dominant (integral pairings are checked by the integer result).
BigInt weyl_dim(const RootSystem& sys, const Weight& highest);

/// Same product without the integrality requirement (used by the growth
/// sums, where the odd parity class is handled by polynomial extension).
Rat weyl_dim_rat(const RootSystem& sys, const Weight& highest);

/// Linear highest-weight dictionary for the semisimple part of k:
/// (mu1, mu2, ell) maps to mu1*slot1 + mu2*slot2 (ell rides on the center).
/// Derived from the strongly orthogonal cascade of the rank-2 pair at build
/// time and validated by the degree detection below.
struct HWDictionary {
    RootSystem sys;
    Weight slot1, slot2;
    Weight rho;  // half sum of positive roots of sys
};

const HWDictionary& dictionary_for(const GroupDatum& d);

/// dim W_{mu1,mu2,ell}.  su(p,q) uses the closed binomial product; the other
/// cases go through the dictionary and the Weyl formula and are independent
/// of ell.
BigInt ktype_dim(const GroupDatum& d, const KType& kt);

/// Degree of mu -> dim W_{mu,mu,0}, detected by exact finite differences on
/// mu = 0, 2, 4, ...; must come out a1 + 4 b1 + 2.
int dim_poly_degree(const GroupDatum& d);

/// dim of the degree-n filtration piece: sum over K-types of pi_ntm with
/// index <= n.  Exact; rational because the odd parity class of so*/e6/e7
/// enters through the polynomial extension of the even-class dimensions.
Rat filtration_dim(const GroupDatum& d, long n, Execution ex = Execution::parallel);

int default_fit_range(const GroupDatum& d);

/// Growth exponent of n -> filtration_dim(n), from exact ratios
/// log2(V(2s)/V(s)) at three consecutive scales s = fit/4, fit/2, fit,
/// sharpened by Richardson extrapolation; the three rounded estimates must
/// agree.  Equals the Gelfand-Kirillov dimension.
int gk_dimension(const GroupDatum& d, int fit_range = 0, Execution ex = Execution::parallel);

}  // namespace hermlie::ktypes
