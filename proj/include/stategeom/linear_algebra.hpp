#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stategeom/rational.hpp"

namespace stategeom {

// Rank by exact Gaussian elimination (first nonzero pivot).
inline std::size_t rational_rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Solves A x = b exactly. Returns a particular solution (free variables set
// to zero), or nullopt when the system is inconsistent. A may be rectangular.
inline std::optional<RatVec> solve_linear_system(RatMatrix a, RatVec b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(b[pivot], b[rank]);
        const Rational p = a[rank][col];
        for (std::size_t c = col; c < cols; ++c) a[rank][c] /= p;
        b[rank] /= p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (b[r] != 0) return std::nullopt;
    RatVec x(cols, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

// Dimension of the affine hull: -1 for no points, 0 for a single point.
inline int affine_rank(const std::vector<RatVec>& points) {
    if (points.empty()) return -1;
    if (points.size() == 1) return 0;
    RatMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
    return static_cast<int>(rational_rank(std::move(diffs)));
}

}  // namespace stategeom
