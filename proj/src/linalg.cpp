#include "hermlie/linalg.hpp"

#include <stdexcept>

namespace hermlie {

std::optional<std::vector<Rat>> solve_exact(RatMatrix A, std::vector<Rat> b) {
    const std::size_t rows = A.size();
    if (rows == 0) return std::vector<Rat>{};
    const std::size_t cols = A[0].size();
    for (std::size_t i = 0; i < rows; ++i) A[i].push_back(b[i]);

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[r], A[p]);
        Rat inv = A[r][c];
        for (auto& x : A[r]) x /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (std::size_t j = c; j <= cols; ++j) A[i][j] -= f * A[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (A[i][cols] != 0) return std::nullopt;

    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = A[i][cols];
    return x;
}

std::vector<Rat> span_coefficients(const std::vector<Weight>& basis, const Weight& w) {
    const std::size_t k = basis.size();
    RatMatrix G(k, std::vector<Rat>(k));
    std::vector<Rat> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) G[i][j] = inner(basis[i], basis[j]);
        rhs[i] = inner(basis[i], w);
    }
    auto sol = solve_exact(std::move(G), std::move(rhs));
    if (!sol) throw std::domain_error("span_coefficients: Gram matrix is singular");
    return *sol;
}

Weight project_onto_span(const std::vector<Weight>& basis, const Weight& w) {
    auto c = span_coefficients(basis, w);
    Weight p(w.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) p += c[i] * basis[i];
    return p;
}

bool in_span(const std::vector<Weight>& basis, const Weight& w) {
    return project_onto_span(basis, w) == w;
}

}  // namespace hermlie
