#pragma once

#include <optional>
#include <vector>

#include "hermlie/rational.hpp"
#include "hermlie/weight.hpp"

namespace hermlie {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Exact Gauss-Jordan solve of A x = b.  Returns nullopt if the system is
/// inconsistent; free variables are set to zero.
std::optional<std::vector<Rat>> solve_exact(RatMatrix A, std::vector<Rat> b);

/// Coefficients c with sum_i c_i basis_i = orthogonal projection of w onto
/// span(basis).  Gram matrix solve, exact.
std::vector<Rat> span_coefficients(const std::vector<Weight>& basis, const Weight& w);

/// Orthogonal projection of w onto span(basis).
Weight project_onto_span(const std::vector<Weight>& basis, const Weight& w);

/// True iff w lies in the exact span of basis.
bool in_span(const std::vector<Weight>& basis, const Weight& w);

}  // namespace hermlie
