#include "aqg/finvec.hpp"

#include <algorithm>
#include <sstream>

#include "aqg/error.hpp"

namespace aqg {

FinVec::FinVec(uint64_t dim, std::vector<Entry> entries) : dim_(dim), ent_(std::move(entries)) {
    std::sort(ent_.begin(), ent_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    // Merge duplicates.
    std::vector<Entry> merged;
    merged.reserve(ent_.size());
    for (auto& e : ent_) {
        if (e.first >= dim_) throw DimensionMismatch("FinVec index out of range");
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
    }
    ent_ = std::move(merged);
    prune();
}

FinVec FinVec::basis(uint64_t dim, uint64_t idx, Scalar c) {
    FinVec v(dim);
    v.set(idx, c);
    return v;
}

void FinVec::prune() {
    ent_.erase(std::remove_if(ent_.begin(), ent_.end(),
                              [](const Entry& e) { return e.second.is_zero(); }),
               ent_.end());
}

Scalar FinVec::get(uint64_t idx) const {
    auto it = std::lower_bound(ent_.begin(), ent_.end(), idx,
                               [](const Entry& e, uint64_t i) { return e.first < i; });
    if (it != ent_.end() && it->first == idx) return it->second;
    return Scalar::zero();
}

void FinVec::set(uint64_t idx, const Scalar& c) {
    if (idx >= dim_) throw DimensionMismatch("FinVec::set index out of range");
    auto it = std::lower_bound(ent_.begin(), ent_.end(), idx,
                               [](const Entry& e, uint64_t i) { return e.first < i; });
    if (it != ent_.end() && it->first == idx) {
        if (c.is_zero())
            ent_.erase(it);
        else
            it->second = c;
    } else if (!c.is_zero()) {
        ent_.insert(it, {idx, c});
    }
}

void FinVec::add_to(uint64_t idx, const Scalar& c) {
    if (c.is_zero()) return;
    if (idx >= dim_) throw DimensionMismatch("FinVec::add_to index out of range");
    auto it = std::lower_bound(ent_.begin(), ent_.end(), idx,
                               [](const Entry& e, uint64_t i) { return e.first < i; });
    if (it != ent_.end() && it->first == idx) {
        it->second += c;
        if (it->second.is_zero()) ent_.erase(it);
    } else {
        ent_.insert(it, {idx, c});
    }
}

FinVec FinVec::operator+(const FinVec& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("FinVec addition");
    FinVec r(dim_);
    r.ent_.reserve(ent_.size() + o.ent_.size());
    size_t i = 0, j = 0;
    while (i < ent_.size() || j < o.ent_.size()) {
        if (j >= o.ent_.size() || (i < ent_.size() && ent_[i].first < o.ent_[j].first)) {
            r.ent_.push_back(ent_[i++]);
        } else if (i >= ent_.size() || o.ent_[j].first < ent_[i].first) {
            r.ent_.push_back(o.ent_[j++]);
        } else {
            Scalar s = ent_[i].second + o.ent_[j].second;
            if (!s.is_zero()) r.ent_.push_back({ent_[i].first, std::move(s)});
            ++i, ++j;
        }
    }
    return r;
}

FinVec FinVec::operator-(const FinVec& o) const { return *this + (-o); }

FinVec FinVec::operator-() const {
    FinVec r = *this;
    for (auto& e : r.ent_) e.second = -e.second;
    return r;
}

FinVec FinVec::scaled(const Scalar& c) const {
    if (c.is_zero()) return FinVec(dim_);
    FinVec r(dim_);
    r.ent_.reserve(ent_.size());
    for (const auto& e : ent_) {
        Scalar s = e.second * c;
        if (!s.is_zero()) r.ent_.push_back({e.first, std::move(s)});
    }
    return r;
}

bool FinVec::operator==(const FinVec& o) const {
    if (dim_ != o.dim_ || ent_.size() != o.ent_.size()) return false;
    for (size_t i = 0; i < ent_.size(); ++i)
        if (ent_[i].first != o.ent_[i].first || ent_[i].second != o.ent_[i].second) return false;
    return true;
}

FinVec FinVec::tensor(const FinVec& o) const {
    FinVec r(dim_ * o.dim_);
    r.ent_.reserve(ent_.size() * o.ent_.size());
    for (const auto& a : ent_)
        for (const auto& b : o.ent_) {
            Scalar s = a.second * b.second;
            if (!s.is_zero()) r.ent_.push_back({a.first * o.dim_ + b.first, std::move(s)});
        }
    // Row-major over sorted factors is already sorted.
    return r;
}

FinVec FinVec::conj() const {
    FinVec r(dim_);
    r.ent_.reserve(ent_.size());
    for (const auto& e : ent_) r.ent_.push_back({e.first, e.second.conj()});
    return r;
}

FinVec::Entry FinVec::leading() const {
    if (ent_.empty()) throw Error("leading() of zero vector");
    return ent_.front();
}

Scalar FinVec::pair(const FinVec& functional) const {
    if (dim_ != functional.dim()) throw DimensionMismatch("FinVec::pair");
    Scalar acc = Scalar::zero();
    size_t i = 0, j = 0;
    const auto& f = functional.entries();
    while (i < ent_.size() && j < f.size()) {
        if (ent_[i].first < f[j].first)
            ++i;
        else if (f[j].first < ent_[i].first)
            ++j;
        else {
            acc += ent_[i].second * f[j].second;
            ++i, ++j;
        }
    }
    return acc;
}

std::string FinVec::str(const std::function<std::string(uint64_t)>& label) const {
    if (ent_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& e : ent_) {
        if (!first) os << " + ";
        os << "(" << e.second.str() << ")*";
        if (label)
            os << label(e.first);
        else
            os << "e" << e.first;
        first = false;
    }
    return os.str();
}

}  // namespace aqg
