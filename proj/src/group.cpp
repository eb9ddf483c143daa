#include "aqg/group.hpp"

#include <algorithm>
#include <sstream>

#include "aqg/error.hpp"

namespace aqg {

uint64_t Group::order() const { throw InvalidInput("order() of infinite group"); }
const std::vector<GroupElem>& Group::elements() const {
    throw InvalidInput("elements() of infinite group");
}
uint64_t Group::index_of(const GroupElem&) const {
    throw InvalidInput("index_of() of infinite group");
}
std::string Group::label(const GroupElem& a) const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")";
    return os.str();
}

FiniteTableGroup::FiniteTableGroup(std::vector<std::vector<uint64_t>> table,
                                   std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
    uint64_t n = table_.size();
    if (n == 0) throw InvalidInput("empty group table");
    for (const auto& row : table_) {
        if (row.size() != n) throw InvalidInput("group table not square");
        for (uint64_t v : row)
            if (v >= n) throw InvalidInput("group table entry out of range");
    }
    if (labels_.empty())
        for (uint64_t i = 0; i < n; ++i) labels_.push_back("g" + std::to_string(i));
    if (labels_.size() != n) throw InvalidInput("label count mismatch");
    // Locate the identity.
    bool found = false;
    for (uint64_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (uint64_t i = 0; i < n; ++i)
            if (table_[e][i] != i || table_[i][e] != i) {
                ok = false;
                break;
            }
        if (ok) {
            id_ = e;
            found = true;
        }
    }
    if (!found) throw InvalidInput("group table has no identity");
    inv_.assign(n, n);
    for (uint64_t i = 0; i < n; ++i) {
        for (uint64_t j = 0; j < n; ++j)
            if (table_[i][j] == id_ && table_[j][i] == id_) {
                inv_[i] = j;
                break;
            }
        if (inv_[i] == n) throw InvalidInput("group table element without inverse");
    }
    for (uint64_t i = 0; i < n; ++i) elems_.push_back({static_cast<int64_t>(i)});
}

GroupElem FiniteTableGroup::mul(const GroupElem& a, const GroupElem& b) const {
    return {static_cast<int64_t>(
        table_[static_cast<uint64_t>(a[0])][static_cast<uint64_t>(b[0])])};
}
GroupElem FiniteTableGroup::inv(const GroupElem& a) const {
    return {static_cast<int64_t>(inv_[static_cast<uint64_t>(a[0])])};
}
uint64_t FiniteTableGroup::index_of(const GroupElem& a) const {
    return static_cast<uint64_t>(a[0]);
}
std::string FiniteTableGroup::label(const GroupElem& a) const {
    return labels_[static_cast<uint64_t>(a[0])];
}
GroupDescriptor FiniteTableGroup::descriptor() const { return {"table", 0, table_, labels_}; }

GroupElem ZnGroup::mul(const GroupElem& a, const GroupElem& b) const {
    GroupElem r(rank_);
    for (size_t i = 0; i < rank_; ++i) r[i] = a[i] + b[i];
    return r;
}
GroupElem ZnGroup::inv(const GroupElem& a) const {
    GroupElem r(rank_);
    for (size_t i = 0; i < rank_; ++i) r[i] = -a[i];
    return r;
}
GroupElem ZnGroup::sample(Rng& rng) const {
    GroupElem r(rank_);
    for (size_t i = 0; i < rank_; ++i) r[i] = rng.range(-20, 20);
    return r;
}
std::string ZnGroup::label(const GroupElem& a) const { return Group::label(a); }

HeisenbergGroup::HeisenbergGroup(int64_t p) : p_(p) {
    if (p < 2) throw InvalidInput("heisenberg_p needs p >= 2");
    for (int64_t a = 0; a < p; ++a)
        for (int64_t b = 0; b < p; ++b)
            for (int64_t c = 0; c < p; ++c) elems_.push_back({a, b, c});
}
GroupElem HeisenbergGroup::mul(const GroupElem& x, const GroupElem& y) const {
    auto m = [&](int64_t v) { return ((v % p_) + p_) % p_; };
    return {m(x[0] + y[0]), m(x[1] + y[1]), m(x[2] + y[2] + x[0] * y[1])};
}
GroupElem HeisenbergGroup::inv(const GroupElem& x) const {
    auto m = [&](int64_t v) { return ((v % p_) + p_) % p_; };
    return {m(-x[0]), m(-x[1]), m(-x[2] + x[0] * x[1])};
}
uint64_t HeisenbergGroup::index_of(const GroupElem& a) const {
    return static_cast<uint64_t>((a[0] * p_ + a[1]) * p_ + a[2]);
}
GroupElem HeisenbergGroup::sample(Rng& rng) const { return elems_[rng.below(order())]; }
std::string HeisenbergGroup::label(const GroupElem& a) const { return Group::label(a); }

GroupPtr cyclic_group(uint64_t n) {
    std::vector<std::vector<uint64_t>> t(n, std::vector<uint64_t>(n));
    std::vector<std::string> labels;
    for (uint64_t i = 0; i < n; ++i) {
        labels.push_back(n <= 10 ? std::to_string(i) : "t" + std::to_string(i));
        for (uint64_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return std::make_shared<FiniteTableGroup>(std::move(t), std::move(labels));
}

GroupPtr s3_group() {
    // Permutations of {0,1,2}: e, (01), (02), (12), (012), (021).
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::string> labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    auto compose = [&](int i, int j) {
        std::array<int, 3> r;
        for (int x = 0; x < 3; ++x) r[x] = perms[i][perms[j][x]];
        return r;
    };
    std::vector<std::vector<uint64_t>> t(6, std::vector<uint64_t>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            auto r = compose(i, j);
            for (int k = 0; k < 6; ++k)
                if (perms[k] == r) t[i][j] = static_cast<uint64_t>(k);
        }
    return std::make_shared<FiniteTableGroup>(std::move(t), std::move(labels));
}

GroupPtr heisenberg_group(int64_t p) { return std::make_shared<HeisenbergGroup>(p); }
GroupPtr z_group() { return std::make_shared<ZGroup>(); }

Report verify_group(const Group& g, Rng& rng, uint64_t samples) {
    Report rep;
    bool assoc = true, unit = true, inverse = true;
    std::string w_assoc, w_unit, w_inv;
    auto check_triple = [&](const GroupElem& a, const GroupElem& b, const GroupElem& c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
            assoc = false;
            w_assoc = g.label(a) + "," + g.label(b) + "," + g.label(c);
        }
    };
    auto check_one = [&](const GroupElem& a) {
        if (g.mul(a, g.identity()) != a || g.mul(g.identity(), a) != a) {
            unit = false;
            w_unit = g.label(a);
        }
        if (!g.is_identity(g.mul(a, g.inv(a))) || !g.is_identity(g.mul(g.inv(a), a))) {
            inverse = false;
            w_inv = g.label(a);
        }
    };
    std::string mode = "exhaustive";
    if (g.is_finite() && g.order() <= 64) {
        const auto& el = g.elements();
        for (const auto& a : el) check_one(a);
        for (const auto& a : el)
            for (const auto& b : el)
                for (const auto& c : el) check_triple(a, b, c);
    } else {
        mode = "sampled(n=" + std::to_string(samples) + ")";
        for (uint64_t s = 0; s < samples; ++s) {
            GroupElem a = g.sample(rng), b = g.sample(rng), c = g.sample(rng);
            check_one(a);
            check_triple(a, b, c);
        }
    }
    rep.record("group_assoc", assoc, w_assoc, mode);
    rep.record("group_unit", unit, w_unit, mode);
    rep.record("group_inverse", inverse, w_inv, mode);
    return rep;
}

GroupElem Factorization::act_left(const GroupElem& h, const GroupElem& k) const {
    return factor(G->mul(embed_h(h), embed_k(k))).first;
}
GroupElem Factorization::act_right(const GroupElem& h, const GroupElem& k) const {
    return factor(G->mul(embed_h(h), embed_k(k))).second;
}

Factorization subgroup_factorization(GroupPtr g, std::vector<GroupElem> k_elems,
                                     std::vector<GroupElem> h_elems,
                                     std::vector<std::string> k_labels,
                                     std::vector<std::string> h_labels) {
    if (!g->is_finite()) throw InvalidInput("subgroup_factorization needs a finite group");
    auto build_sub = [&](const std::vector<GroupElem>& elems,
                         std::vector<std::string> labels) -> GroupPtr {
        uint64_t n = elems.size();
        std::map<GroupElem, uint64_t> idx;
        for (uint64_t i = 0; i < n; ++i) idx[elems[i]] = i;
        std::vector<std::vector<uint64_t>> t(n, std::vector<uint64_t>(n));
        for (uint64_t i = 0; i < n; ++i)
            for (uint64_t j = 0; j < n; ++j) {
                auto it = idx.find(g->mul(elems[i], elems[j]));
                if (it == idx.end()) throw InvalidInput("subset not closed under product");
                t[i][j] = it->second;
            }
        if (labels.empty())
            for (const auto& e : elems) labels.push_back(g->label(e));
        return std::make_shared<FiniteTableGroup>(std::move(t), std::move(labels));
    };

    Factorization f;
    f.G = g;
    f.K = build_sub(k_elems, std::move(k_labels));
    f.H = build_sub(h_elems, std::move(h_labels));
    auto ke = std::make_shared<std::vector<GroupElem>>(std::move(k_elems));
    auto he = std::make_shared<std::vector<GroupElem>>(std::move(h_elems));
    f.embed_k = [ke](const GroupElem& k) { return (*ke)[static_cast<uint64_t>(k[0])]; };
    f.embed_h = [he](const GroupElem& h) { return (*he)[static_cast<uint64_t>(h[0])]; };

    // Precompute the unique factorization of every group element.
    auto table = std::make_shared<std::map<GroupElem, std::pair<GroupElem, GroupElem>>>();
    for (uint64_t i = 0; i < ke->size(); ++i)
        for (uint64_t j = 0; j < he->size(); ++j) {
            GroupElem prod = g->mul((*ke)[i], (*he)[j]);
            GroupElem kk = {static_cast<int64_t>(i)}, hh = {static_cast<int64_t>(j)};
            if (table->count(prod)) throw InvalidInput("factorization not unique");
            (*table)[prod] = {kk, hh};
        }
    if (table->size() != g->order()) throw InvalidInput("K H does not cover G");
    f.factor = [table](const GroupElem& x) {
        auto it = table->find(x);
        if (it == table->end()) throw InvalidInput("element outside K H");
        return it->second;
    };
    return f;
}

Factorization matched_pair_factorization(
    GroupPtr k, GroupPtr h,
    std::function<GroupElem(const GroupElem&, const GroupElem&)> left,
    std::function<GroupElem(const GroupElem&, const GroupElem&)> right) {
    size_t k_len = k->identity().size();

    struct ProductGroup : Group {
        GroupPtr K, H;
        std::function<GroupElem(const GroupElem&, const GroupElem&)> lact, ract;
        size_t klen;

        std::pair<GroupElem, GroupElem> split(const GroupElem& g) const {
            return {GroupElem(g.begin(), g.begin() + static_cast<long>(klen)),
                    GroupElem(g.begin() + static_cast<long>(klen), g.end())};
        }
        GroupElem join(const GroupElem& k0, const GroupElem& h0) const {
            GroupElem r = k0;
            r.insert(r.end(), h0.begin(), h0.end());
            return r;
        }
        GroupElem identity() const override { return join(K->identity(), H->identity()); }
        GroupElem mul(const GroupElem& a, const GroupElem& b) const override {
            auto [k1, h1] = split(a);
            auto [k2, h2] = split(b);
            return join(K->mul(k1, lact(h1, k2)), H->mul(ract(h1, k2), h2));
        }
        GroupElem inv(const GroupElem& a) const override {
            auto [k0, h0] = split(a);
            GroupElem kp = lact(H->inv(h0), K->inv(k0));
            GroupElem hp = H->inv(ract(h0, kp));
            return join(kp, hp);
        }
        bool is_finite() const override { return K->is_finite() && H->is_finite(); }
        uint64_t order() const override { return K->order() * H->order(); }
        const std::vector<GroupElem>& elements() const override {
            if (elems_.empty()) {
                for (const auto& k0 : K->elements())
                    for (const auto& h0 : H->elements()) elems_.push_back(join(k0, h0));
            }
            return elems_;
        }
        uint64_t index_of(const GroupElem& a) const override {
            auto [k0, h0] = split(a);
            return K->index_of(k0) * H->order() + H->index_of(h0);
        }
        GroupElem sample(Rng& rng) const override {
            return join(K->sample(rng), H->sample(rng));
        }
        std::string label(const GroupElem& a) const override {
            auto [k0, h0] = split(a);
            return K->label(k0) + "." + H->label(h0);
        }
        GroupDescriptor descriptor() const override {
            throw InvalidInput("product group has no standalone descriptor");
        }
        mutable std::vector<GroupElem> elems_;
    };

    auto pg = std::make_shared<ProductGroup>();
    pg->K = k;
    pg->H = h;
    pg->lact = left;
    pg->ract = right;
    pg->klen = k_len;

    Factorization f;
    f.G = pg;
    f.K = k;
    f.H = h;
    f.embed_k = [pg, h](const GroupElem& k0) { return pg->join(k0, h->identity()); };
    f.embed_h = [pg, k](const GroupElem& h0) { return pg->join(k->identity(), h0); };
    f.factor = [pg](const GroupElem& g0) { return pg->split(g0); };
    return f;
}

Report verify_matched_groups(const Factorization& f, Rng& rng, uint64_t samples) {
    Report rep;
    bool finite = f.K->is_finite() && f.H->is_finite();
    uint64_t nk = finite ? f.K->order() : 0;
    uint64_t nh = finite ? f.H->order() : 0;
    bool exhaustive = finite && nk * nk * nh <= 200'000 && nh * nh * nk <= 200'000;
    std::string mode = exhaustive ? "exhaustive"
                                  : "sampled(n=" + std::to_string(samples) + ")";

    std::vector<std::pair<GroupElem, GroupElem>> hk_pairs;       // (h, k)
    std::vector<std::tuple<GroupElem, GroupElem, GroupElem>> hkk;  // (h, k, k')
    std::vector<std::tuple<GroupElem, GroupElem, GroupElem>> hhk;  // (h, h', k)
    if (exhaustive) {
        for (const auto& h : f.H->elements())
            for (const auto& k : f.K->elements()) {
                hk_pairs.push_back({h, k});
                for (const auto& k2 : f.K->elements()) hkk.push_back({h, k, k2});
                for (const auto& h2 : f.H->elements()) hhk.push_back({h, h2, k});
            }
    } else {
        for (uint64_t s = 0; s < samples; ++s) {
            GroupElem h = f.H->sample(rng), h2 = f.H->sample(rng);
            GroupElem k = f.K->sample(rng), k2 = f.K->sample(rng);
            hk_pairs.push_back({h, k});
            hkk.push_back({h, k, k2});
            hhk.push_back({h, h2, k});
        }
    }

    {
        // hk = (h |> k)(h <| k) with unique factorization, plus unit laws.
        bool ok = true;
        std::string w;
        for (const auto& [h, k] : hk_pairs) {
            GroupElem g = f.G->mul(f.embed_h(h), f.embed_k(k));
            auto [k1, h1] = f.factor(g);
            if (f.G->mul(f.embed_k(k1), f.embed_h(h1)) != g) {
                ok = false;
                w = f.H->label(h) + "," + f.K->label(k);
                break;
            }
        }
        if (ok) {
            GroupElem eh = f.H->identity(), ek = f.K->identity();
            for (const auto& [h, k] : hk_pairs) {
                if (f.act_left(eh, k) != k || f.act_right(eh, k) != eh ||
                    f.act_left(h, ek) != ek || f.act_right(h, ek) != h) {
                    ok = false;
                    w = f.H->label(h) + "," + f.K->label(k);
                    break;
                }
            }
        }
        rep.record("factorization_unique", ok, w, mode);
    }
    {
        bool ok = true;
        std::string w;
        for (const auto& [h, k, k2] : hkk) {
            GroupElem lhs = f.act_left(h, f.K->mul(k, k2));
            GroupElem rhs = f.K->mul(f.act_left(h, k), f.act_left(f.act_right(h, k), k2));
            GroupElem lhs2 = f.act_right(h, f.K->mul(k, k2));
            GroupElem rhs2 = f.act_right(f.act_right(h, k), k2);
            if (lhs != rhs || lhs2 != rhs2) {
                ok = false;
                w = f.H->label(h) + "," + f.K->label(k) + "," + f.K->label(k2);
                break;
            }
        }
        rep.record("left_action_compat", ok, w, mode);
    }
    {
        bool ok = true;
        std::string w;
        for (const auto& [h, h2, k] : hhk) {
            GroupElem lhs = f.act_right(f.H->mul(h, h2), k);
            GroupElem rhs = f.H->mul(f.act_right(h, f.act_left(h2, k)), f.act_right(h2, k));
            GroupElem lhs2 = f.act_left(f.H->mul(h, h2), k);
            GroupElem rhs2 = f.act_left(h, f.act_left(h2, k));
            if (lhs != rhs || lhs2 != rhs2) {
                ok = false;
                w = f.H->label(h) + "," + f.H->label(h2) + "," + f.K->label(k);
                break;
            }
        }
        rep.record("right_action_compat", ok, w, mode);
    }
    return rep;
}

}  // namespace aqg
