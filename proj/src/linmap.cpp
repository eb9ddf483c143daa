#include "aqg/linmap.hpp"

#include "aqg/error.hpp"

namespace aqg {

LinMap LinMap::identity(uint64_t n) {
    LinMap m(n, n);
    for (uint64_t j = 0; j < n; ++j) m.col_[j] = FinVec::basis(n, j);
    return m;
}

LinMap LinMap::from_columns(uint64_t rows, std::vector<FinVec> cols) {
    LinMap m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, std::move(cols[j]));
    return m;
}

void LinMap::set_col(uint64_t j, FinVec v) {
    if (v.dim() != rows_) throw DimensionMismatch("LinMap::set_col");
    col_[j] = std::move(v);
}

FinVec LinMap::apply(const FinVec& v) const {
    if (v.dim() != cols()) throw DimensionMismatch("LinMap::apply");
    FinVec r(rows_);
    for (const auto& e : v.entries()) r += col_[e.first].scaled(e.second);
    return r;
}

LinMap LinMap::compose(const LinMap& g) const {
    if (g.rows() != cols()) throw DimensionMismatch("LinMap::compose");
    LinMap r(rows_, g.cols());
    for (uint64_t j = 0; j < g.cols(); ++j) r.col_[j] = apply(g.col(j));
    return r;
}

LinMap LinMap::operator+(const LinMap& o) const {
    if (rows_ != o.rows_ || cols() != o.cols()) throw DimensionMismatch("LinMap::operator+");
    LinMap r(rows_, cols());
    for (uint64_t j = 0; j < cols(); ++j) r.col_[j] = col_[j] + o.col_[j];
    return r;
}

LinMap LinMap::scaled(const Scalar& c) const {
    LinMap r(rows_, cols());
    for (uint64_t j = 0; j < cols(); ++j) r.col_[j] = col_[j].scaled(c);
    return r;
}

LinMap LinMap::transpose() const {
    LinMap r(cols(), rows_);
    for (uint64_t j = 0; j < cols(); ++j)
        for (const auto& e : col_[j].entries()) r.col_[e.first].set(j, e.second);
    return r;
}

LinMap LinMap::tensor(const LinMap& o) const {
    LinMap r(rows_ * o.rows_, cols() * o.cols());
    for (uint64_t j1 = 0; j1 < cols(); ++j1)
        for (uint64_t j2 = 0; j2 < o.cols(); ++j2)
            r.col_[j1 * o.cols() + j2] = col_[j1].tensor(o.col_[j2]);
    return r;
}

bool LinMap::operator==(const LinMap& o) const {
    if (rows_ != o.rows_ || cols() != o.cols()) return false;
    for (uint64_t j = 0; j < cols(); ++j)
        if (col_[j] != o.col_[j]) return false;
    return true;
}

FinVec apply_on_legs(const LinMap& m, uint64_t dom_a, uint64_t dom_b, uint64_t out_a,
                     uint64_t out_b, const FinVec& v, const std::vector<uint64_t>& dims,
                     size_t leg_a, size_t leg_b) {
    if (leg_a >= leg_b || leg_b >= dims.size()) throw DimensionMismatch("apply_on_legs legs");
    if (dims[leg_a] != dom_a || dims[leg_b] != dom_b || m.cols() != dom_a * dom_b ||
        m.rows() != out_a * out_b)
        throw DimensionMismatch("apply_on_legs dims");

    std::vector<uint64_t> out_dims = dims;
    out_dims[leg_a] = out_a;
    out_dims[leg_b] = out_b;
    uint64_t out_total = 1;
    for (auto d : out_dims) out_total *= d;
    FinVec result(out_total);

    // Decompose each index into leg coordinates, apply m on (leg_a, leg_b).
    size_t k = dims.size();
    std::vector<uint64_t> coord(k);
    for (const auto& e : v.entries()) {
        uint64_t rest = e.first;
        for (size_t i = k; i-- > 0;) {
            coord[i] = rest % dims[i];
            rest /= dims[i];
        }
        uint64_t in_pair = coord[leg_a] * dom_b + coord[leg_b];
        const FinVec& img = m.col(in_pair);
        for (const auto& me : img.entries()) {
            auto [oa, ob] = untensor_index(me.first, out_b);
            coord[leg_a] = oa;
            coord[leg_b] = ob;
            uint64_t idx = 0;
            for (size_t i = 0; i < k; ++i) idx = idx * out_dims[i] + coord[i];
            result.add_to(idx, e.second * me.second);
        }
        // Restore the leg coordinates for the next entry (coord reused).
    }
    return result;
}

}  // namespace aqg
