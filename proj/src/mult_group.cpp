#include "aqg/mult_group.hpp"

#include <sstream>

#include "aqg/error.hpp"

namespace aqg {

void gf_add(GroupFun& f, const GroupElem& x, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = f.find(x);
    if (it == f.end()) {
        f.emplace(x, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

GroupFun gf_basis(const GroupElem& x, const Scalar& c) {
    GroupFun f;
    gf_add(f, x, c);
    return f;
}

GroupFun gf_scale(const GroupFun& f, const Scalar& c) {
    GroupFun r;
    for (const auto& [x, v] : f) gf_add(r, x, v * c);
    return r;
}

GroupFun gf_sum(const GroupFun& a, const GroupFun& b) {
    GroupFun r = a;
    for (const auto& [x, v] : b) gf_add(r, x, v);
    return r;
}

bool gf_eq(const GroupFun& a, const GroupFun& b) { return a == b; }

std::string gf_str(const Group& g, const GroupFun& f) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, v] : f) {
        if (!first) os << " + ";
        os << "(" << v.str() << ")*" << g.label(x);
        first = false;
    }
    return os.str();
}

GroupFun LazyGroupAlgebra::mul(const GroupFun& a, const GroupFun& b) const {
    GroupFun r;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) gf_add(r, g->mul(x, y), cx * cy);
    return r;
}
Scalar LazyGroupAlgebra::eps(const GroupFun& a) const {
    Scalar acc = Scalar::zero();
    for (const auto& [x, c] : a) acc += c;
    return acc;
}
GroupFun LazyGroupAlgebra::S(const GroupFun& a) const {
    GroupFun r;
    for (const auto& [x, c] : a) gf_add(r, g->inv(x), c);
    return r;
}
Scalar LazyGroupAlgebra::integral(const GroupFun& a) const {
    auto it = a.find(g->identity());
    return it == a.end() ? Scalar::zero() : it->second;
}

GroupFun LazyFunctionAlgebra::mul(const GroupFun& a, const GroupFun& b) const {
    GroupFun r;
    for (const auto& [x, cx] : a) {
        auto it = b.find(x);
        if (it != b.end()) gf_add(r, x, cx * it->second);
    }
    return r;
}
Scalar LazyFunctionAlgebra::eps(const GroupFun& a) const {
    auto it = a.find(g->identity());
    return it == a.end() ? Scalar::zero() : it->second;
}
GroupFun LazyFunctionAlgebra::S(const GroupFun& a) const {
    GroupFun r;
    for (const auto& [x, c] : a) gf_add(r, g->inv(x), c);
    return r;
}
Scalar LazyFunctionAlgebra::integral(const GroupFun& a) const {
    Scalar acc = Scalar::zero();
    for (const auto& [x, c] : a) acc += c;
    return acc;
}

void GroupTensor::add(const GroupElem& u, const GroupElem& v, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(u, v);
    auto it = ent.find(key);
    if (it == ent.end()) {
        ent.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) ent.erase(it);
    }
}

namespace {

// Componentwise leg product: pointwise for function legs, group product for
// group-algebra legs. Returns false (entry annihilates) for mismatched
// function-leg points.
bool leg_mul(const LegAlg& alg, const GroupElem& u, const GroupElem& v, GroupElem& out) {
    if (alg.is_function) {
        if (u != v) return false;
        out = u;
        return true;
    }
    out = alg.g->mul(u, v);
    return true;
}

LegAlg fun_leg(const GroupPtr& g) { return {g, true}; }
LegAlg grp_leg(const GroupPtr& g) { return {g, false}; }

}  // namespace

GroupTensor gt_mul(const GroupTensor& a, const GroupTensor& b) {
    if (!(a.leg1 == b.leg1) || !(a.leg2 == b.leg2))
        throw DimensionMismatch("GroupTensor legs disagree");
    GroupTensor r{a.leg1, a.leg2, {}};
    for (const auto& [pa, ca] : a.ent)
        for (const auto& [pb, cb] : b.ent) {
            GroupElem u, v;
            if (!leg_mul(a.leg1, pa.first, pb.first, u)) continue;
            if (!leg_mul(a.leg2, pa.second, pb.second, v)) continue;
            r.add(u, v, ca * cb);
        }
    return r;
}

GroupFun gt_apply_leg1(const GroupTensor& t,
                       const std::function<Scalar(const GroupElem&)>& f) {
    GroupFun r;
    for (const auto& [p, c] : t.ent) gf_add(r, p.second, c * f(p.first));
    return r;
}

GroupFun gt_apply_leg2(const GroupTensor& t,
                       const std::function<Scalar(const GroupElem&)>& f) {
    GroupFun r;
    for (const auto& [p, c] : t.ent) gf_add(r, p.first, c * f(p.second));
    return r;
}

namespace {

// Delta(f) T for f in F(G): entry (u, v) scaled by f(uv). Same on both sides.
GroupTensor cop_times(const GroupPtr& g, const GroupFun& f, const GroupTensor& t) {
    GroupTensor r{t.leg1, t.leg2, {}};
    for (const auto& [p, c] : t.ent) {
        auto it = f.find(g->mul(p.first, p.second));
        if (it != f.end()) r.add(p.first, p.second, c * it->second);
    }
    return r;
}

GroupTensor coaction_cover_b(const GroupPairAlgebras& pair, const GroupFun& a,
                             const GroupFun& c) {
    // Gamma(h)(delta_k (x) 1) = delta_k (x) (h <| k), extended bilinearly.
    GroupTensor r{fun_leg(pair.fact.K), grp_leg(pair.fact.H), {}};
    for (const auto& [h, ch] : a)
        for (const auto& [k, ck] : c) r.add(k, pair.fact.act_right(h, k), ch * ck);
    return r;
}

GroupTensor coaction_times(const GroupPairAlgebras& pair, const GroupFun& a,
                           const GroupTensor& t, bool coaction_on_left) {
    GroupTensor r{t.leg1, t.leg2, {}};
    for (const auto& [h, ch] : a)
        for (const auto& [p, c] : t.ent) {
            const GroupElem& k = p.first;
            GroupElem ha = pair.fact.act_right(h, k);  // h <| k
            GroupElem v = coaction_on_left ? pair.fact.H->mul(ha, p.second)
                                           : pair.fact.H->mul(p.second, ha);
            r.add(k, v, ch * c);
        }
    return r;
}

}  // namespace

Report LazyMultiplier::verify(const LazyFunctionAlgebra& alg, Rng& rng, uint64_t samples,
                              const GroupFun* embedded) const {
    Report rep;
    bool compat = true, agree = true;
    std::string w_compat, w_agree;
    for (uint64_t s = 0; s < samples; ++s) {
        GroupFun b = gf_basis(alg.g->sample(rng), rng.small_rational());
        gf_add(b, alg.g->sample(rng), rng.small_rational());
        GroupFun b2 = gf_basis(alg.g->sample(rng), rng.small_rational());
        // (b m) b' = b (m b')
        GroupFun lhs = alg.mul(mul_by_left(b), b2);
        GroupFun rhs = alg.mul(b, mul_by_right(b2));
        if (!gf_eq(lhs, rhs)) {
            compat = false;
            w_compat = gf_str(*alg.g, b) + " ; " + gf_str(*alg.g, b2);
        }
        if (embedded) {
            if (!gf_eq(mul_by_right(b2), alg.mul(*embedded, b2)) ||
                !gf_eq(mul_by_left(b), alg.mul(b, *embedded))) {
                agree = false;
                w_agree = gf_str(*alg.g, b2);
            }
        }
    }
    std::string mode = "sampled(n=" + std::to_string(samples) + ")";
    rep.record("multiplier_compat", compat, w_compat, mode);
    if (embedded) rep.record("multiplier_embedding", agree, w_agree, mode);
    return rep;
}

GroupPairAlgebras GroupPairAlgebras::make(Factorization f) {
    GroupPairAlgebras p;
    p.A = LazyGroupAlgebra{f.H};
    p.B = LazyFunctionAlgebra{f.K};
    p.fact = std::move(f);
    return p;
}

GroupFun GroupPairAlgebras::act(const GroupFun& b, const GroupFun& a) const {
    // (f <| h)(k) = f(h |> k): delta_k <| h = delta_{h^{-1} |> k}.
    GroupFun r;
    for (const auto& [h, ch] : a) {
        GroupElem hinv = fact.H->inv(h);
        for (const auto& [k, ck] : b) gf_add(r, fact.act_left(hinv, k), ch * ck);
    }
    return r;
}

LazyMultiplier GroupPairAlgebras::iota_phi_gamma(const GroupFun& a) const {
    // (id (x) phi_A) Gamma(a) acts on F(K) as sum over the [h <| k = e] part.
    auto self = std::make_shared<GroupPairAlgebras>(*this);
    GroupFun acopy = a;
    LazyMultiplier m;
    auto action = [self, acopy](const GroupFun& b) {
        GroupFun r;
        for (const auto& [h, ch] : acopy)
            for (const auto& [k, cb] : b)
                if (self->fact.H->is_identity(self->fact.act_right(h, k)))
                    gf_add(r, k, ch * cb);
        return r;
    };
    m.mul_by_right = action;
    m.mul_by_left = action;  // F(K) is abelian
    return m;
}

CoveredExpr CoveredExpr::concrete(GroupTensor t) {
    CoveredExpr e;
    e.factors_.push_back(std::move(t));
    return e;
}
CoveredExpr CoveredExpr::one_leg(const LegAlg& l1, const LegAlg& l2, const GroupFun& c,
                                 int leg) {
    CoveredExpr e;
    e.factors_.push_back(OneLeg{l1, l2, c, leg});
    return e;
}
CoveredExpr CoveredExpr::fun_coproduct(GroupPtr g, GroupFun f) {
    CoveredExpr e;
    e.factors_.push_back(LazyFunCop{std::move(g), std::move(f)});
    return e;
}
CoveredExpr CoveredExpr::pair_coaction(std::shared_ptr<const GroupPairAlgebras> pair,
                                       GroupFun a) {
    CoveredExpr e;
    e.factors_.push_back(LazyCoaction{std::move(pair), std::move(a)});
    return e;
}
CoveredExpr CoveredExpr::product(std::vector<CoveredExpr> factors) {
    CoveredExpr e;
    for (auto& f : factors)
        for (auto& x : f.factors_) e.factors_.push_back(std::move(x));
    return e;
}

bool CoveredExpr::combine(Factor& left, Factor& right, Factor& out) {
    if (auto* lt = std::get_if<GroupTensor>(&left)) {
        if (auto* rt = std::get_if<GroupTensor>(&right)) {
            out = gt_mul(*lt, *rt);
            return true;
        }
        if (auto* ro = std::get_if<OneLeg>(&right)) {
            GroupTensor t{ro->l1, ro->l2, {}};
            for (const auto& [p, c] : lt->ent)
                for (const auto& [x, cx] : ro->c) {
                    GroupElem u = p.first, v = p.second;
                    if (ro->leg == 1) {
                        if (!leg_mul(ro->l1, p.first, x, u)) continue;
                    } else {
                        if (!leg_mul(ro->l2, p.second, x, v)) continue;
                    }
                    t.add(u, v, c * cx);
                }
            out = std::move(t);
            return true;
        }
        if (auto* rc = std::get_if<LazyFunCop>(&right)) {
            out = cop_times(rc->g, rc->f, *lt);
            return true;
        }
        if (auto* rg = std::get_if<LazyCoaction>(&right)) {
            out = coaction_times(*rg->pair, rg->a, *lt, false);
            return true;
        }
    }
    if (auto* lo = std::get_if<OneLeg>(&left)) {
        if (auto* rt = std::get_if<GroupTensor>(&right)) {
            GroupTensor t{lo->l1, lo->l2, {}};
            for (const auto& [p, c] : rt->ent)
                for (const auto& [x, cx] : lo->c) {
                    GroupElem u = p.first, v = p.second;
                    if (lo->leg == 1) {
                        if (!leg_mul(lo->l1, x, p.first, u)) continue;
                    } else {
                        if (!leg_mul(lo->l2, x, p.second, v)) continue;
                    }
                    t.add(u, v, c * cx);
                }
            out = std::move(t);
            return true;
        }
        if (auto* ro = std::get_if<OneLeg>(&right)) {
            if (lo->leg == ro->leg) {
                OneLeg merged = *lo;
                const LegAlg& alg = lo->leg == 1 ? lo->l1 : lo->l2;
                merged.c = alg.is_function ? LazyFunctionAlgebra{alg.g}.mul(lo->c, ro->c)
                                           : LazyGroupAlgebra{alg.g}.mul(lo->c, ro->c);
                out = std::move(merged);
                return true;
            }
            GroupTensor t{lo->l1, lo->l2, {}};
            const GroupFun& c1 = lo->leg == 1 ? lo->c : ro->c;
            const GroupFun& c2 = lo->leg == 1 ? ro->c : lo->c;
            for (const auto& [u, cu] : c1)
                for (const auto& [v, cv] : c2) t.add(u, v, cu * cv);
            out = std::move(t);
            return true;
        }
        if (auto* rc = std::get_if<LazyFunCop>(&right)) {
            // (c (x) 1) Delta(f) resp. (1 (x) c) Delta(f): pointwise legs, so
            // supp is {(x, x^{-1} y)} resp. {(y x^{-1}, x)} over f(y) != 0.
            GroupTensor t{fun_leg(rc->g), fun_leg(rc->g), {}};
            for (const auto& [x, cx] : lo->c)
                for (const auto& [y, fy] : rc->f) {
                    if (lo->leg == 1)
                        t.add(x, rc->g->mul(rc->g->inv(x), y), cx * fy);
                    else
                        t.add(rc->g->mul(y, rc->g->inv(x)), x, cx * fy);
                }
            out = std::move(t);
            return true;
        }
        if (auto* rg = std::get_if<LazyCoaction>(&right)) {
            if (lo->leg != 1)
                throw UncoveredEvaluation("coaction needs a cover on its F(K) leg");
            out = coaction_cover_b(*rg->pair, rg->a, lo->c);
            return true;
        }
    }
    if (auto* lc = std::get_if<LazyFunCop>(&left)) {
        if (auto* rt = std::get_if<GroupTensor>(&right)) {
            out = cop_times(lc->g, lc->f, *rt);
            return true;
        }
        if (auto* ro = std::get_if<OneLeg>(&right)) {
            GroupTensor t{fun_leg(lc->g), fun_leg(lc->g), {}};
            for (const auto& [x, cx] : ro->c)
                for (const auto& [y, fy] : lc->f) {
                    if (ro->leg == 1)
                        t.add(x, lc->g->mul(lc->g->inv(x), y), cx * fy);
                    else
                        t.add(lc->g->mul(y, lc->g->inv(x)), x, cx * fy);
                }
            out = std::move(t);
            return true;
        }
    }
    if (auto* lg = std::get_if<LazyCoaction>(&left)) {
        if (auto* rt = std::get_if<GroupTensor>(&right)) {
            out = coaction_times(*lg->pair, lg->a, *rt, true);
            return true;
        }
        if (auto* ro = std::get_if<OneLeg>(&right)) {
            if (ro->leg != 1)
                throw UncoveredEvaluation("coaction needs a cover on its F(K) leg");
            out = coaction_cover_b(*lg->pair, lg->a, ro->c);
            return true;
        }
    }
    return false;
}

GroupTensor CoveredExpr::eval() const {
    std::vector<Factor> fs = factors_;
    if (fs.empty()) throw UncoveredEvaluation("empty expression");
    bool progress = true;
    while (fs.size() > 1 && progress) {
        progress = false;
        for (size_t i = 0; i + 1 < fs.size(); ++i) {
            Factor out;
            if (combine(fs[i], fs[i + 1], out)) {
                fs[i] = std::move(out);
                fs.erase(fs.begin() + static_cast<long>(i) + 1);
                progress = true;
                break;
            }
        }
    }
    if (fs.size() != 1)
        throw UncoveredEvaluation("product of multipliers cannot be resolved");
    if (auto* t = std::get_if<GroupTensor>(&fs[0])) return *t;
    throw UncoveredEvaluation("expression has an uncovered multiplier leg");
}

HopfData group_algebra(const Group& g) {
    if (!g.is_finite())
        throw InvalidInput("group_algebra needs a finite group (use LazyGroupAlgebra)");
    uint64_t n = g.order();
    const auto& el = g.elements();
    HopfData h;
    h.dim = n;
    for (const auto& x : el) h.basis.push_back(g.label(x));
    h.mult.resize(n * n);
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j)
            h.mult[i * n + j] = FinVec::basis(n, g.index_of(g.mul(el[i], el[j])));
    h.unit = FinVec::basis(n, g.index_of(g.identity()));
    h.comult.resize(n);
    for (uint64_t i = 0; i < n; ++i) h.comult[i] = FinVec::basis(n * n, i * n + i);
    h.counit.assign(n, Scalar::one());
    h.antipode = LinMap(n, n);
    for (uint64_t i = 0; i < n; ++i)
        h.antipode.set(g.index_of(g.inv(el[i])), i, Scalar::one());
    h.star = h.antipode;  // h* = h^{-1}
    return h;
}

HopfData function_algebra(const Group& g) {
    if (!g.is_finite())
        throw InvalidInput("function_algebra needs a finite group (use LazyFunctionAlgebra)");
    uint64_t n = g.order();
    const auto& el = g.elements();
    HopfData h;
    h.dim = n;
    for (const auto& x : el) h.basis.push_back("d[" + g.label(x) + "]");
    h.mult.resize(n * n);
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j)
            h.mult[i * n + j] = i == j ? FinVec::basis(n, i) : FinVec(n);
    h.unit = FinVec(n);
    for (uint64_t i = 0; i < n; ++i) h.unit.set(i, Scalar::one());
    h.comult.resize(n, FinVec(n * n));
    // Delta(delta_k) = sum_{uv = k} delta_u (x) delta_v.
    for (uint64_t u = 0; u < n; ++u)
        for (uint64_t v = 0; v < n; ++v) {
            uint64_t k = g.index_of(g.mul(el[u], el[v]));
            h.comult[k].add_to(u * n + v, Scalar::one());
        }
    h.counit.assign(n, Scalar::zero());
    h.counit[g.index_of(g.identity())] = Scalar::one();
    h.antipode = LinMap(n, n);
    for (uint64_t i = 0; i < n; ++i)
        h.antipode.set(g.index_of(g.inv(el[i])), i, Scalar::one());
    h.star = LinMap::identity(n);  // pointwise conjugation
    return h;
}

}  // namespace aqg
