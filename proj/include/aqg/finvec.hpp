#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "aqg/scalar.hpp"

namespace aqg {

/// Sparse vector in a finite-dimensional space: sorted (index, scalar) pairs,
/// no stored zeros, indices < dim. Tensor indices are row-major throughout:
/// (i, j) in dims (d1, d2) maps to i*d2 + j.
class FinVec {
public:
    using Entry = std::pair<uint64_t, Scalar>;

    FinVec() : dim_(0) {}
    explicit FinVec(uint64_t dim) : dim_(dim) {}
    FinVec(uint64_t dim, std::vector<Entry> entries);

    static FinVec basis(uint64_t dim, uint64_t idx, Scalar c = Scalar::one());

    uint64_t dim() const { return dim_; }
    bool is_zero() const { return ent_.empty(); }
    size_t support_size() const { return ent_.size(); }
    const std::vector<Entry>& entries() const { return ent_; }

    Scalar get(uint64_t idx) const;
    void set(uint64_t idx, const Scalar& c);
    void add_to(uint64_t idx, const Scalar& c);

    FinVec operator+(const FinVec& o) const;
    FinVec operator-(const FinVec& o) const;
    FinVec operator-() const;
    FinVec scaled(const Scalar& c) const;
    FinVec& operator+=(const FinVec& o) { return *this = *this + o; }
    FinVec& operator-=(const FinVec& o) { return *this = *this - o; }

    bool operator==(const FinVec& o) const;
    bool operator!=(const FinVec& o) const { return !(*this == o); }

    /// Kronecker product with the global row-major index convention.
    FinVec tensor(const FinVec& o) const;

    /// Entrywise conjugation of coefficients.
    FinVec conj() const;

    /// First nonzero coordinate in index order, as (index, value).
    Entry leading() const;

    /// Pair against a functional given as a FinVec of the same dimension:
    /// sum_i f_i * v_i.
    Scalar pair(const FinVec& functional) const;

    std::string str(const std::function<std::string(uint64_t)>& label = nullptr) const;

private:
    uint64_t dim_;
    std::vector<Entry> ent_;
    void prune();
};

/// Split a row-major tensor index into its two legs.
inline std::pair<uint64_t, uint64_t> untensor_index(uint64_t idx, uint64_t d2) {
    return {idx / d2, idx % d2};
}

}  // namespace aqg
