#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "aqg/hopf.hpp"
#include "aqg/rng.hpp"

namespace aqg {

/// Group elements are opaque integer-coordinate tuples; each Group instance
/// fixes their meaning. This uniformly covers finite tables (one index
/// coordinate), Z, Z^n, and unitriangular matrix groups over Z_p.
using GroupElem = std::vector<int64_t>;

struct GroupDescriptor {
    std::string kind;  // "table" | "Z" | "Z^n" | "heisenberg_p"
    int64_t param = 0;
    std::vector<std::vector<uint64_t>> table;  // for kind == "table"
    std::vector<std::string> labels;
};

class Group {
public:
    virtual ~Group() = default;
    virtual GroupElem identity() const = 0;
    virtual GroupElem mul(const GroupElem& a, const GroupElem& b) const = 0;
    virtual GroupElem inv(const GroupElem& a) const = 0;
    virtual bool is_finite() const = 0;
    virtual uint64_t order() const;
    virtual const std::vector<GroupElem>& elements() const;
    virtual uint64_t index_of(const GroupElem& a) const;
    virtual GroupElem sample(Rng& rng) const = 0;
    virtual std::string label(const GroupElem& a) const;
    virtual GroupDescriptor descriptor() const = 0;

    bool is_identity(const GroupElem& a) const { return a == identity(); }
};

using GroupPtr = std::shared_ptr<const Group>;

class FiniteTableGroup : public Group {
public:
    FiniteTableGroup(std::vector<std::vector<uint64_t>> table, std::vector<std::string> labels);

    GroupElem identity() const override { return {static_cast<int64_t>(id_)}; }
    GroupElem mul(const GroupElem& a, const GroupElem& b) const override;
    GroupElem inv(const GroupElem& a) const override;
    bool is_finite() const override { return true; }
    uint64_t order() const override { return table_.size(); }
    const std::vector<GroupElem>& elements() const override { return elems_; }
    uint64_t index_of(const GroupElem& a) const override;
    GroupElem sample(Rng& rng) const override { return elems_[rng.below(order())]; }
    std::string label(const GroupElem& a) const override;
    GroupDescriptor descriptor() const override;

private:
    std::vector<std::vector<uint64_t>> table_;
    std::vector<std::string> labels_;
    std::vector<GroupElem> elems_;
    std::vector<uint64_t> inv_;
    uint64_t id_ = 0;
};

/// The integers under addition.
class ZGroup : public Group {
public:
    GroupElem identity() const override { return {0}; }
    GroupElem mul(const GroupElem& a, const GroupElem& b) const override { return {a[0] + b[0]}; }
    GroupElem inv(const GroupElem& a) const override { return {-a[0]}; }
    bool is_finite() const override { return false; }
    GroupElem sample(Rng& rng) const override { return {rng.range(-20, 20)}; }
    std::string label(const GroupElem& a) const override { return std::to_string(a[0]); }
    GroupDescriptor descriptor() const override { return {"Z", 0, {}, {}}; }
};

class ZnGroup : public Group {
public:
    explicit ZnGroup(size_t rank) : rank_(rank) {}
    GroupElem identity() const override { return GroupElem(rank_, 0); }
    GroupElem mul(const GroupElem& a, const GroupElem& b) const override;
    GroupElem inv(const GroupElem& a) const override;
    bool is_finite() const override { return false; }
    GroupElem sample(Rng& rng) const override;
    std::string label(const GroupElem& a) const override;
    GroupDescriptor descriptor() const override {
        return {"Z^n", static_cast<int64_t>(rank_), {}, {}};
    }

private:
    size_t rank_;
};

/// Upper unitriangular 3x3 matrices over Z_p: coordinates (a, b, c) for
/// entries (1,2), (2,3), (1,3); (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').
class HeisenbergGroup : public Group {
public:
    explicit HeisenbergGroup(int64_t p);
    GroupElem identity() const override { return {0, 0, 0}; }
    GroupElem mul(const GroupElem& a, const GroupElem& b) const override;
    GroupElem inv(const GroupElem& a) const override;
    bool is_finite() const override { return true; }
    uint64_t order() const override { return static_cast<uint64_t>(p_ * p_ * p_); }
    const std::vector<GroupElem>& elements() const override { return elems_; }
    uint64_t index_of(const GroupElem& a) const override;
    GroupElem sample(Rng& rng) const override;
    std::string label(const GroupElem& a) const override;
    GroupDescriptor descriptor() const override { return {"heisenberg_p", p_, {}, {}}; }
    int64_t p() const { return p_; }

private:
    int64_t p_;
    std::vector<GroupElem> elems_;
};

/// Cyclic group Z_n as a finite table.
GroupPtr cyclic_group(uint64_t n);
/// Symmetric group S3 as a finite table (elements e, (12), (13), (23), (123), (132)).
GroupPtr s3_group();
GroupPtr heisenberg_group(int64_t p);
GroupPtr z_group();

/// Exhaustive (finite) or sampled group-axiom check.
Report verify_group(const Group& g, Rng& rng, uint64_t samples = 100);

/// A factorization G = K H with K cap H = {e}: every g factors uniquely as
/// k h. The left action of H on K and right action of H... (of K on H in the
/// group sense) are derived from h k = (h |> k)(h <| k) inside G.
struct Factorization {
    GroupPtr G, K, H;
    std::function<GroupElem(const GroupElem&)> embed_k, embed_h;
    /// g -> (k, h) with g = embed_k(k) * embed_h(h).
    std::function<std::pair<GroupElem, GroupElem>(const GroupElem&)> factor;

    /// h |> k in K and h <| k in H, from factoring h k.
    GroupElem act_left(const GroupElem& h, const GroupElem& k) const;
    GroupElem act_right(const GroupElem& h, const GroupElem& k) const;
};

/// Build a factorization from a finite group and chosen subgroups (elements
/// listed explicitly; throws InvalidInput if K H does not cover G uniquely).
Factorization subgroup_factorization(GroupPtr g, std::vector<GroupElem> k_elems,
                                     std::vector<GroupElem> h_elems,
                                     std::vector<std::string> k_labels = {},
                                     std::vector<std::string> h_labels = {});

/// Build G = K >< H from a matched pair of groups given by action maps.
/// left(h, k) = h |> k must be a left action of H on the set K, right(h, k)
/// = h <| k a right action of K on the set H, satisfying the matched-pair
/// compatibility (verified by verify_matched_groups).
Factorization matched_pair_factorization(
    GroupPtr k, GroupPtr h,
    std::function<GroupElem(const GroupElem&, const GroupElem&)> left,
    std::function<GroupElem(const GroupElem&, const GroupElem&)> right);

/// Group-level matched pair laws: unit laws, h |> (k k') = (h |> k)((h <| k) |> k'),
/// (h h') <| k = (h <| (h' |> k))(h' <| k), uniqueness of factorization.
Report verify_matched_groups(const Factorization& f, Rng& rng, uint64_t samples = 200);

}  // namespace aqg
