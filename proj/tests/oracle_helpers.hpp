#pragma once

// Test-side oracles, kept independent of the library's solver path: dense
// row reduction on explicitly materialized systems.

#include <vector>

#include "aqg/hopf.hpp"

namespace aqg::test {

using DenseMatrix = std::vector<std::vector<Scalar>>;

// Dense RREF in place; returns pivot column per row-echelon step.
inline std::vector<size_t> dense_rref(DenseMatrix& m) {
    std::vector<size_t> pivots;
    size_t rows = m.size();
    if (rows == 0) return pivots;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Nullspace basis of the dense matrix (columns = unknowns).
inline std::vector<std::vector<Scalar>> dense_nullspace(DenseMatrix m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<size_t> pivots = dense_rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols, Scalar::zero());
        v[f] = Scalar::one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Brute-force enumeration of right integrals: the nullspace of the full
// right-invariance system assembled densely from the structure constants.
inline std::vector<std::vector<Scalar>> brute_force_right_integrals(const HopfData& h) {
    const uint64_t n = h.dim;
    DenseMatrix rows;
    for (uint64_t a = 0; a < n; ++a) {
        // (psi (x) id) Delta(a) - psi(a) 1 = 0, one row per output coordinate.
        DenseMatrix block(n, std::vector<Scalar>(n, Scalar::zero()));
        for (const auto& e : h.comult[a].entries()) {
            auto [p, r] = untensor_index(e.first, n);
            block[r][p] += e.second;
        }
        for (const auto& u : h.unit.entries()) block[u.first][a] -= u.second;
        for (auto& row : block) rows.push_back(std::move(row));
    }
    return dense_nullspace(std::move(rows));
}

inline bool proportional(const FinVec& a, const FinVec& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto [ia, ca] = a.leading();
    Scalar factor = b.get(ia);
    if (factor.is_zero()) return false;
    return a.scaled(factor / ca) == b;
}

inline FinVec from_dense(const std::vector<Scalar>& v) {
    FinVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r.set(i, v[i]);
    return r;
}

}  // namespace aqg::test
