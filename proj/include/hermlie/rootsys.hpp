#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermlie/weight.hpp"

namespace hermlie {

enum class RootType { A, B, C, D, E6, E7 };

/// Compact/noncompact marking for the Hermitian pairs the library uses.
///   none          - no marking
///   hermitian_e6  - (e6, so(10)+so(2)): spinor-type positive roots noncompact
///   hermitian_e7  - (e7, e6+so(2)): odd coefficient on the last simple root
///   d_u_n         - (so(2n), u(n)): e_i + e_j noncompact
///   bd_so2        - (so(n), so(2)+so(n-2)): roots touching e_1 noncompact
///   a_u2          - (su(n), s(u(2)+u(n-2))): e_i - e_j with i <= 2 < j noncompact
enum class SplitKind { none, hermitian_e6, hermitian_e7, d_u_n, bd_so2, a_u2 };

struct RootSystem {
    RootType type;
    int rank;
    std::size_t ambient;              // coordinate dimension (8 for E-series)
    std::vector<Weight> positive;
    std::vector<Weight> simple;
    std::optional<std::vector<bool>> noncompact;  // parallel to positive

    std::string label() const;
    bool is_root(const Weight& w) const;  // positive or negative
    std::vector<Weight> noncompact_positive() const;
};

enum class CascadeDirection { lowest, highest };

/// Positive roots, simple roots and (optionally) a compact/noncompact split.
RootSystem build_root_system(RootType type, int rank, SplitKind split = SplitKind::none);

/// Coefficients of w in the simple-root basis, exact.
std::vector<Rat> simple_coefficients(const RootSystem& sys, const Weight& w);

/// Height = sum of simple-root coefficients.
Rat root_height(const RootSystem& sys, const Weight& w);

/// Strongly orthogonal cascade over the noncompact positive roots: repeatedly
/// take the lowest (resp. highest) remaining root by height, keep only roots
/// strongly orthogonal to it, until none remain.  The extremal root must be
/// unique at every step.
std::vector<Weight> hc_cascade(const RootSystem& sys, CascadeDirection dir);

/// Weights dual to the simple coroots: 2<lambda_i, b_j>/<b_j,b_j> = delta_ij,
/// solved exactly inside span(simple).
std::vector<Weight> fundamental_weights(const std::vector<Weight>& simple);

/// Half sum of positive roots.
Weight half_sum_positive(const RootSystem& sys);

}  // namespace hermlie
