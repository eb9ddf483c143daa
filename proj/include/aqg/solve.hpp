#pragma once

#include <map>
#include <optional>

#include "aqg/linmap.hpp"

namespace aqg {

/// Exact affine solution set of a linear system: a particular solution plus a
/// basis of the homogeneous nullspace. `consistent == false` signals the
/// empty set.
struct AffineSolution {
    bool consistent = false;
    FinVec particular;
    std::vector<FinVec> nullspace;

    bool unique() const { return consistent && nullspace.empty(); }
};

/// Incremental exact Gaussian elimination over Q / Q(zeta_n). Rows carry an
/// augmented block (right-hand sides, or an identity block for inversion).
class RowReducer {
public:
    RowReducer(uint64_t main_cols, uint64_t aug_cols)
        : main_(main_cols), aug_(aug_cols) {}

    /// row has dimension main_cols + aug_cols.
    void add_row(FinVec row);

    /// Bring stored rows to fully reduced form (idempotent).
    void back_substitute();

    uint64_t main_cols() const { return main_; }
    uint64_t rank() const { return pivots_.size(); }
    const std::map<uint64_t, FinVec>& pivot_rows() const { return pivots_; }
    /// Rows whose main part vanished but whose augmented part did not.
    const std::vector<FinVec>& residual_rows() const { return residuals_; }

private:
    uint64_t main_, aug_;
    std::map<uint64_t, FinVec> pivots_;
    std::vector<FinVec> residuals_;
    bool reduced_ = true;
};

/// Accumulates equations row * x = rhs and solves exactly.
class LinearSystem {
public:
    explicit LinearSystem(uint64_t unknowns) : red_(unknowns, 1), n_(unknowns) {}

    void add_equation(const FinVec& coeffs, const Scalar& rhs);
    /// Convenience: adds one equation per row of `m` with the matching rhs
    /// coordinate (i.e. the constraint m * x = rhs).
    void add_map_equation(const LinMap& m, const FinVec& rhs);

    AffineSolution solve();

private:
    RowReducer red_;
    uint64_t n_;
};

/// Solve m * x = rhs. Dimensions must agree.
AffineSolution solve_linear(const LinMap& m, const FinVec& rhs);

/// Exact basis of ker(m).
std::vector<FinVec> nullspace(const LinMap& m);

/// Exact inverse; throws SingularMap if not invertible.
LinMap invert(const LinMap& m);

/// Factored square system for repeated solves against the same matrix.
/// Requires the matrix to be invertible (throws SingularMap otherwise).
class Factored {
public:
    explicit Factored(const LinMap& m) : inv_(invert(m)) {}
    FinVec solve(const FinVec& rhs) const { return inv_.apply(rhs); }
    const LinMap& inverse() const { return inv_; }

private:
    LinMap inv_;
};

}  // namespace aqg
