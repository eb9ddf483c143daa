#include "aqg/solve.hpp"

#include "aqg/error.hpp"

namespace aqg {

void RowReducer::add_row(FinVec row) {
    if (row.dim() != main_ + aug_) throw DimensionMismatch("RowReducer::add_row");
    while (!row.is_zero()) {
        auto [lead, lc] = row.leading();
        if (lead >= main_) {
            residuals_.push_back(std::move(row));
            return;
        }
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            pivots_.emplace(lead, row.scaled(lc.inverse()));
            reduced_ = false;
            return;
        }
        row -= it->second.scaled(lc);
    }
}

void RowReducer::back_substitute() {
    if (reduced_) return;
    // Process pivots in descending order; rows with larger pivots are fully
    // reduced before smaller ones use them.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        FinVec& row = it->second;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& e : row.entries()) {
                if (e.first <= it->first || e.first >= main_) continue;
                auto jt = pivots_.find(e.first);
                if (jt == pivots_.end()) continue;
                row -= jt->second.scaled(e.second);
                changed = true;
                break;
            }
        }
    }
    reduced_ = true;
}

void LinearSystem::add_equation(const FinVec& coeffs, const Scalar& rhs) {
    if (coeffs.dim() != n_) throw DimensionMismatch("LinearSystem::add_equation");
    FinVec row(n_ + 1);
    for (const auto& e : coeffs.entries()) row.set(e.first, e.second);
    row.set(n_, -rhs);  // row * x - rhs = 0 as augmented row (x | 1)
    red_.add_row(std::move(row));
}

void LinearSystem::add_map_equation(const LinMap& m, const FinVec& rhs) {
    if (rhs.dim() != m.rows()) throw DimensionMismatch("LinearSystem::add_map_equation");
    LinMap t = m.transpose();
    for (uint64_t i = 0; i < m.rows(); ++i) add_equation(t.col(i), rhs.get(i));
}

AffineSolution LinearSystem::solve() {
    red_.back_substitute();
    AffineSolution sol;
    for (const auto& r : red_.residual_rows())
        if (!r.is_zero()) return sol;  // 0 = nonzero: inconsistent

    const auto& rows = red_.pivot_rows();
    sol.consistent = true;
    sol.particular = FinVec(n_);
    for (const auto& [p, row] : rows) {
        // Augmented entry holds -rhs after reduction; x_p = rhs portion.
        Scalar aug = row.get(n_);
        if (!aug.is_zero()) sol.particular.set(p, -aug);
    }
    // Free columns give the nullspace basis.
    for (uint64_t f = 0; f < n_; ++f) {
        if (rows.count(f)) continue;
        FinVec v(n_);
        v.set(f, Scalar::one());
        for (const auto& [p, row] : rows) {
            Scalar c = row.get(f);
            if (!c.is_zero()) v.set(p, -c);
        }
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

AffineSolution solve_linear(const LinMap& m, const FinVec& rhs) {
    if (rhs.dim() != m.rows()) throw DimensionMismatch("solve_linear rhs");
    LinearSystem sys(m.cols());
    sys.add_map_equation(m, rhs);
    return sys.solve();
}

std::vector<FinVec> nullspace(const LinMap& m) {
    return solve_linear(m, FinVec(m.rows())).nullspace;
}

LinMap invert(const LinMap& m) {
    if (m.rows() != m.cols()) throw SingularMap("non-square matrix");
    uint64_t n = m.rows();
    RowReducer red(n, n);
    LinMap t = m.transpose();
    for (uint64_t i = 0; i < n; ++i) {
        FinVec row(2 * n);
        for (const auto& e : t.col(i).entries()) row.set(e.first, e.second);
        row.set(n + i, Scalar::one());
        red.add_row(std::move(row));
    }
    if (red.rank() < n) throw SingularMap("rank-deficient matrix");
    red.back_substitute();
    // RREF of [M | I] is [I | M^{-1}]; pivot row p carries row p of M^{-1}.
    LinMap inv(n, n);
    for (const auto& [p, row] : red.pivot_rows())
        for (const auto& e : row.entries())
            if (e.first >= n) inv.set(p, e.first - n, e.second);
    return inv;
}

}  // namespace aqg
