#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hermlie/groups.hpp"
#include "hermlie/weight.hpp"

namespace hermlie::branching {

/// Unitary principal series of SL(2,R); eps = 0 spherical, 1 non-spherical.
/// The continuous parameter is the ambient family variable.
struct Sl2Principal {
    int eps;
};

/// (Limit of) discrete series of SL(2,R); ell <= -1 holomorphic side,
/// ell >= 1 antiholomorphic side, |ell| >= 2 genuine discrete series.
struct Sl2Discrete {
    int ell;
};

/// Discrete series with an undetermined parameter: tau_{sign * sym}, sym >= min.
struct Sl2DiscreteSym {
    int sign;  // +1 or -1
    std::string sym = "l";
    int min = 1;
};

/// One of the two infinite-dimensional irreducible unitaries of the Borel B.
struct SigmaB {
    int sign;  // +1 or -1
};

/// sigma_B^+ (+) sigma_B^- slot whose SL(2,R) preimage is undetermined.
struct SigmaBSum {};

/// SO(m) acting on degree-k harmonic polynomials.
struct SoHarmonic {
    int m;
    int k;
};

/// U(n) (or its double cover) type by weakly decreasing half-integer tuple.
struct UnHighestWeight {
    int n;
    std::vector<Rat> w;
};

/// Principal series of SU(5,1): 4-tuple (weakly decreasing, integer gaps)
/// plus the continuous parameter mu_sign * mu.
struct Su51Principal {
    std::array<Rat, 4> nu;
    int mu_sign = 1;
};

/// Highest- or lowest-weight module of a named algebra, weight in
/// epsilon-coordinates.
struct HwModule {
    std::string algebra;
    bool lowest = false;
    Weight w;
};

using RepLabel = std::variant<Sl2Principal, Sl2Discrete, Sl2DiscreteSym, SigmaB, SigmaBSum,
                              SoHarmonic, UnHighestWeight, Su51Principal, HwModule>;

nlohmann::json label_json(const RepLabel& r);

struct TensorWord {
    std::vector<RepLabel> factors;
};

struct DiscreteSummand {
    TensorWord word;
    long mult = 1;
};

struct ContinuousFamily {
    std::string domain = "iR>=0";
    std::string variable = "mu";
    TensorWord word;
    bool undetermined = false;  // SL(2,R)-action on this family not pinned down
};

/// Multiset of discrete summands plus continuous families, canonically
/// ordered so serialized forms are byte-stable.
struct Decomposition {
    std::vector<DiscreteSummand> discrete;
    std::vector<ContinuousFamily> continuous;

    void canonicalize();
    nlohmann::json to_json() const;
    bool operator==(const Decomposition& o) const;
};

/// dim H^k(R^m) = C(k+m-1, m-1) - C(k+m-3, m-1).
BigInt harmonic_dim(int m, int k);

/// Restriction of the metaplectic representation (sign of the central
/// parameter) to the Levi M, truncated at k-max.
Decomposition metaplectic_restriction(const GroupDatum& d, int sign, int kmax);

/// Tensor product of a lowest-weight and a highest-weight discrete series of
/// SL(2,R): full principal-series integral plus a finite discrete string.
Decomposition sl2_tensor_opposite(int k1, int k2);

/// Assembled tensor decomposition over all harmonic sectors, truncated so
/// that every integer index is <= k-max.
Decomposition tensor_lemma(const GroupDatum& d, int sign, int kmax);

/// Restriction to the Borel: principal series split into both sigma_B's, a
/// discrete series lands on the one opposite to its sign.
std::vector<SigmaB> restrict_to_B(const RepLabel& r);

/// Branching of the next-to-minimal representation of so(2,n) to
/// SL(2,R) x SL(2,R) x SO(n-2), truncated at k-max.
Decomposition so2n_ntm_branching(int n, int kmax);

/// The two routes to the discrete spectrum (per-sector tensor decomposition
/// vs the regrouped branching) enumerate the same (ell, k) multiset.
bool regrouping_equivalence(int n, int kmax);

/// Interlacing branching of a U(n) type to U(n-1): all nu with
/// mu_i >= nu_i >= mu_{i+1}, entries in mu's congruence class.
std::vector<std::vector<Rat>> gt_branch(const std::vector<Rat>& mu);

/// Decomposition of the line-bundle L^2-space over SU(5,1)/U(5) at level k
/// (dual = contragredient side): multiplicity-free principal-series integrals.
Decomposition e6_l2_decomposition(int k, bool dual = false);

struct ExclusionReport {
    int k = 0;
    int patterns_checked = 0;
    int consistent_count = 0;
    std::vector<Rat> candidate;   // the unique consistent parameter
    bool dominant_found = false;  // any fully dominant assignment (must stay false)
    bool sum_zero = false;
    bool final_pair_inverted = false;  // mu5 < mu6: dominance fails at the last pair
    bool matches_closed_form = false;
};

/// No discrete spectrum in the level-k L^2-space: brute-force search over
/// the S6 matchings of the lowest-K-type system.
ExclusionReport e6_discrete_exclusion(int k);

/// Branching of the next-to-minimal representation of e6(-14) to
/// SL(2,R) x SU(5,1): for k in [1, kmax], m in [1, k] the paired continuous
/// families with an undetermined discrete parameter; the m = 0 stratum is
/// emitted with an undetermined sigma_B^+ (+) sigma_B^- marker.
Decomposition e6_ntm_branching(int kmax);

}  // namespace hermlie::branching
