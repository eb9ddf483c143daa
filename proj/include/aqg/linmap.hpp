#pragma once

#include <vector>

#include "aqg/finvec.hpp"

namespace aqg {

/// Sparse linear map, stored by columns: col(j) is the image of basis j.
class LinMap {
public:
    LinMap() : rows_(0) {}
    LinMap(uint64_t rows, uint64_t cols) : rows_(rows), col_(cols, FinVec(rows)) {}

    static LinMap identity(uint64_t n);
    static LinMap from_columns(uint64_t rows, std::vector<FinVec> cols);

    uint64_t rows() const { return rows_; }
    uint64_t cols() const { return col_.size(); }

    const FinVec& col(uint64_t j) const { return col_[j]; }
    void set_col(uint64_t j, FinVec v);
    Scalar at(uint64_t i, uint64_t j) const { return col_[j].get(i); }
    void set(uint64_t i, uint64_t j, const Scalar& c) { col_[j].set(i, c); }

    FinVec apply(const FinVec& v) const;
    /// Composition: (*this) after g.
    LinMap compose(const LinMap& g) const;
    LinMap operator+(const LinMap& o) const;
    LinMap scaled(const Scalar& c) const;
    LinMap transpose() const;
    /// Kronecker product with the global row-major convention.
    LinMap tensor(const LinMap& o) const;

    bool operator==(const LinMap& o) const;
    bool operator!=(const LinMap& o) const { return !(*this == o); }

    bool is_identity() const { return *this == identity(rows_); }

private:
    uint64_t rows_;
    std::vector<FinVec> col_;
};

/// Apply a map X (x) Y -> X' (x) Y' on two chosen legs of a k-fold tensor
/// space. dims are the leg dimensions of the input space; legs a < b select
/// which two legs the map consumes (their dims must match the map's domain
/// factorization dima, dimb). Output dims replace (dima, dimb) by
/// (out_dima, out_dimb) in place.
FinVec apply_on_legs(const LinMap& m, uint64_t dom_a, uint64_t dom_b, uint64_t out_a,
                     uint64_t out_b, const FinVec& v, const std::vector<uint64_t>& dims,
                     size_t leg_a, size_t leg_b);

}  // namespace aqg
