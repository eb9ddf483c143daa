#include "aqg/hopf.hpp"

#include <functional>

#include "aqg/error.hpp"
#include "aqg/rng.hpp"
#include "aqg/solve.hpp"

namespace aqg {

FinVec HopfData::mul(const FinVec& x, const FinVec& y) const {
    if (x.dim() != dim || y.dim() != dim) throw DimensionMismatch("HopfData::mul");
    FinVec r(dim);
    for (const auto& a : x.entries())
        for (const auto& b : y.entries())
            r += mult[a.first * dim + b.first].scaled(a.second * b.second);
    return r;
}

FinVec HopfData::delta(const FinVec& x) const {
    FinVec r(dim * dim);
    for (const auto& a : x.entries()) r += comult[a.first].scaled(a.second);
    return r;
}

Scalar HopfData::eps(const FinVec& x) const {
    Scalar acc = Scalar::zero();
    for (const auto& a : x.entries()) acc += counit[a.first] * a.second;
    return acc;
}

FinVec HopfData::star_of(const FinVec& x) const {
    if (!star) throw InvalidInput("star structure missing");
    return star->apply(x.conj());
}

FinVec HopfData::mul2(const FinVec& x, const FinVec& y) const {
    if (x.dim() != dim * dim || y.dim() != dim * dim) throw DimensionMismatch("HopfData::mul2");
    FinVec r(dim * dim);
    for (const auto& a : x.entries())
        for (const auto& b : y.entries()) {
            auto [a1, a2] = untensor_index(a.first, dim);
            auto [b1, b2] = untensor_index(b.first, dim);
            Scalar c = a.second * b.second;
            r += mult[a1 * dim + b1].tensor(mult[a2 * dim + b2]).scaled(c);
        }
    return r;
}

FinVec HopfData::pow(const FinVec& x, uint64_t k) const {
    FinVec acc = unit;
    for (uint64_t i = 0; i < k; ++i) acc = mul(acc, x);
    return acc;
}

bool HopfData::is_grouplike(const FinVec& x) const {
    return !x.is_zero() && delta(x) == x.tensor(x) && eps(x) == Scalar::one();
}

std::optional<FinVec> HopfData::inverse_of(const FinVec& x) const {
    // Solve x * y = 1 by linear algebra, then confirm the other side.
    LinMap leftmul(dim, dim);
    for (uint64_t j = 0; j < dim; ++j) leftmul.set_col(j, mul(x, e(j)));
    AffineSolution sol = solve_linear(leftmul, unit);
    if (!sol.consistent) return std::nullopt;
    if (mul(sol.particular, x) != unit) return std::nullopt;
    return sol.particular;
}

namespace {

std::string wit(const HopfData& h, uint64_t i) { return h.label(i); }
std::string wit(const HopfData& h, uint64_t i, uint64_t j) {
    return h.label(i) + ", " + h.label(j);
}
std::string wit(const HopfData& h, uint64_t i, uint64_t j, uint64_t k) {
    return h.label(i) + ", " + h.label(j) + ", " + h.label(k);
}

}  // namespace

// Runs `body(i, j)` either on all pairs of [0,n)^2 or on a seeded sample,
// depending on the estimated cost. Returns the mode string used.
std::string for_pairs(uint64_t n, uint64_t cost_per, const VerifyOptions& opt,
                      const std::function<bool(uint64_t, uint64_t)>& body) {
    if (n * n * std::max<uint64_t>(cost_per, 1) <= opt.op_budget) {
        for (uint64_t i = 0; i < n; ++i)
            for (uint64_t j = 0; j < n; ++j)
                if (!body(i, j)) return "exhaustive";
        return "exhaustive";
    }
    Rng rng(opt.seed);
    for (uint64_t s = 0; s < opt.samples; ++s)
        if (!body(rng.below(n), rng.below(n))) break;
    return "sampled(n=" + std::to_string(opt.samples) + ",seed=" + std::to_string(opt.seed) + ")";
}

std::string for_triples(uint64_t n, uint64_t cost_per, const VerifyOptions& opt,
                        const std::function<bool(uint64_t, uint64_t, uint64_t)>& body) {
    if (n * n * n * std::max<uint64_t>(cost_per, 1) <= opt.op_budget) {
        for (uint64_t i = 0; i < n; ++i)
            for (uint64_t j = 0; j < n; ++j)
                for (uint64_t k = 0; k < n; ++k)
                    if (!body(i, j, k)) return "exhaustive";
        return "exhaustive";
    }
    Rng rng(opt.seed);
    for (uint64_t s = 0; s < opt.samples; ++s)
        if (!body(rng.below(n), rng.below(n), rng.below(n))) break;
    return "sampled(n=" + std::to_string(opt.samples) + ",seed=" + std::to_string(opt.seed) + ")";
}

Report verify_hopf(const HopfData& h, const VerifyOptions& opt) {
    Report rep;
    const uint64_t n = h.dim;

    {
        bool ok = true;
        std::string w;
        std::string mode =
            for_triples(n, 4, opt, [&](uint64_t i, uint64_t j, uint64_t k) {
                if (h.mul(h.mult[i * n + j], h.e(k)) != h.mul(h.e(i), h.mult[j * n + k])) {
                    ok = false;
                    w = wit(h, i, j, k);
                    return false;
                }
                return true;
            });
        rep.record("assoc", ok, w, mode);
    }
    {
        bool ok = true;
        std::string w;
        for (uint64_t i = 0; ok && i < n; ++i)
            if (h.mul(h.unit, h.e(i)) != h.e(i) || h.mul(h.e(i), h.unit) != h.e(i)) {
                ok = false;
                w = wit(h, i);
            }
        rep.record("unit", ok, w);
    }
    {
        // (Delta (x) id) Delta = (id (x) Delta) Delta
        bool ok = true;
        std::string w;
        LinMap dmap(n * n, n);
        for (uint64_t i = 0; i < n; ++i) dmap.set_col(i, h.comult[i]);
        for (uint64_t i = 0; ok && i < n; ++i) {
            FinVec d = h.comult[i];
            FinVec left = apply_on_legs(dmap, n, 1, n * n, 1, d, {n, n, 1}, 0, 1);
            FinVec right = apply_on_legs(dmap, n, 1, n * n, 1, d, {1, n, n}, 1, 2);
            if (left != right) {
                ok = false;
                w = wit(h, i);
            }
        }
        rep.record("coassoc", ok, w);
    }
    {
        // (eps (x) id) Delta = id = (id (x) eps) Delta
        bool ok = true;
        std::string w;
        for (uint64_t i = 0; ok && i < n; ++i) {
            FinVec l(n), r(n);
            for (const auto& e : h.comult[i].entries()) {
                auto [p, q] = untensor_index(e.first, n);
                l.add_to(q, e.second * h.counit[p]);
                r.add_to(p, e.second * h.counit[q]);
            }
            if (l != h.e(i) || r != h.e(i)) {
                ok = false;
                w = wit(h, i);
            }
        }
        rep.record("counit", ok, w);
    }
    {
        // Delta is an algebra homomorphism, Delta(1) = 1 (x) 1
        bool ok = h.delta(h.unit) == h.unit.tensor(h.unit);
        std::string w = ok ? "" : "unit";
        uint64_t avg_terms = 1;
        for (uint64_t i = 0; i < n; ++i) avg_terms += h.comult[i].support_size();
        avg_terms = std::max<uint64_t>(1, avg_terms / std::max<uint64_t>(1, n));
        std::string mode = "exhaustive";
        if (ok)
            mode = for_pairs(n, avg_terms * avg_terms * 8, opt, [&](uint64_t i, uint64_t j) {
                if (h.delta(h.mult[i * n + j]) != h.mul2(h.comult[i], h.comult[j])) {
                    ok = false;
                    w = wit(h, i, j);
                    return false;
                }
                return true;
            });
        rep.record("comult_is_hom", ok, w, mode);
    }
    {
        bool ok = h.eps(h.unit) == Scalar::one();
        std::string w = ok ? "" : "unit";
        std::string mode = "exhaustive";
        if (ok)
            mode = for_pairs(n, 2, opt, [&](uint64_t i, uint64_t j) {
                if (h.eps(h.mult[i * n + j]) != h.counit[i] * h.counit[j]) {
                    ok = false;
                    w = wit(h, i, j);
                    return false;
                }
                return true;
            });
        rep.record("counit_is_hom", ok, w, mode);
    }
    {
        // m(S (x) id)Delta = unit . eps = m(id (x) S)Delta
        bool ok = true;
        std::string w;
        for (uint64_t i = 0; ok && i < n; ++i) {
            FinVec l(n), r(n);
            for (const auto& e : h.comult[i].entries()) {
                auto [p, q] = untensor_index(e.first, n);
                l += h.mul(h.S(h.e(p)), h.e(q)).scaled(e.second);
                r += h.mul(h.e(p), h.S(h.e(q))).scaled(e.second);
            }
            FinVec want = h.unit.scaled(h.counit[i]);
            if (l != want || r != want) {
                ok = false;
                w = wit(h, i);
            }
        }
        rep.record("antipode_axiom", ok, w);
    }
    {
        bool ok = true;
        try {
            invert(h.antipode);
        } catch (const SingularMap&) {
            ok = false;
        }
        rep.record("antipode_bijective", ok, "S not invertible");
    }
    if (h.star) {
        const LinMap& st = *h.star;
        bool ok = true;
        std::string w;
        for (uint64_t i = 0; ok && i < n; ++i)
            if (h.star_of(h.star_of(h.e(i))) != h.e(i)) {
                ok = false;
                w = wit(h, i);
            }
        rep.record("star_involutive", ok, w);

        ok = true;
        w.clear();
        std::string mode = for_pairs(n, 6, opt, [&](uint64_t i, uint64_t j) {
            FinVec lhs = h.star_of(h.mult[i * n + j]);
            FinVec rhs = h.mul(h.star_of(h.e(j)), h.star_of(h.e(i)));
            if (lhs != rhs) {
                ok = false;
                w = wit(h, i, j);
                return false;
            }
            return true;
        });
        rep.record("star_antimultiplicative", ok, w, mode);

        ok = true;
        w.clear();
        for (uint64_t i = 0; ok && i < n; ++i) {
            // Delta(x^*) = Delta(x)^{* (x) *}
            FinVec lhs = h.delta(h.star_of(h.e(i)));
            FinVec rhs(n * n);
            for (const auto& e : h.comult[i].entries()) {
                auto [p, q] = untensor_index(e.first, n);
                rhs += h.star_of(h.e(p)).tensor(h.star_of(h.e(q))).scaled(e.second.conj());
            }
            if (lhs != rhs) {
                ok = false;
                w = wit(h, i);
            }
        }
        rep.record("star_comult", ok, w);

        ok = true;
        w.clear();
        for (uint64_t i = 0; ok && i < n; ++i)
            if (h.S(h.star_of(h.S(h.star_of(h.e(i))))) != h.e(i)) {
                ok = false;
                w = wit(h, i);
            }
        rep.record("star_antipode", ok, w);
        (void)st;
    }
    return rep;
}

HopfData opposite(const HopfData& h) {
    HopfData r = h;
    for (uint64_t i = 0; i < h.dim; ++i)
        for (uint64_t j = 0; j < h.dim; ++j) r.mult[i * h.dim + j] = h.mult[j * h.dim + i];
    r.antipode = invert(h.antipode);
    for (auto& lbl : r.basis) (void)lbl;
    return r;
}

HopfData coopposite(const HopfData& h) {
    HopfData r = h;
    for (uint64_t i = 0; i < h.dim; ++i) {
        FinVec flipped(h.dim * h.dim);
        for (const auto& e : h.comult[i].entries()) {
            auto [p, q] = untensor_index(e.first, h.dim);
            flipped.add_to(q * h.dim + p, e.second);
        }
        r.comult[i] = std::move(flipped);
    }
    r.antipode = invert(h.antipode);
    return r;
}

HopfData tensor_hopf(const HopfData& a, const HopfData& b) {
    if (a.field != 1 && b.field != 1 && a.field != b.field)
        throw FieldMismatch("tensor_hopf over different cyclotomic fields");
    HopfData r;
    r.dim = a.dim * b.dim;
    r.field = std::max(a.field, b.field);
    r.basis.reserve(r.dim);
    for (uint64_t i = 0; i < a.dim; ++i)
        for (uint64_t j = 0; j < b.dim; ++j) r.basis.push_back(a.basis[i] + "(x)" + b.basis[j]);
    r.mult.resize(r.dim * r.dim, FinVec(r.dim));
    for (uint64_t i1 = 0; i1 < a.dim; ++i1)
        for (uint64_t j1 = 0; j1 < b.dim; ++j1)
            for (uint64_t i2 = 0; i2 < a.dim; ++i2)
                for (uint64_t j2 = 0; j2 < b.dim; ++j2)
                    r.mult[(i1 * b.dim + j1) * r.dim + (i2 * b.dim + j2)] =
                        a.mult[i1 * a.dim + i2].tensor(b.mult[j1 * b.dim + j2]);
    r.unit = a.unit.tensor(b.unit);
    r.comult.resize(r.dim, FinVec(r.dim * r.dim));
    for (uint64_t i = 0; i < a.dim; ++i)
        for (uint64_t j = 0; j < b.dim; ++j) {
            FinVec d(r.dim * r.dim);
            for (const auto& ea : a.comult[i].entries())
                for (const auto& eb : b.comult[j].entries()) {
                    auto [p1, p2] = untensor_index(ea.first, a.dim);
                    auto [q1, q2] = untensor_index(eb.first, b.dim);
                    d.add_to((p1 * b.dim + q1) * r.dim + (p2 * b.dim + q2),
                             ea.second * eb.second);
                }
            r.comult[i * b.dim + j] = std::move(d);
        }
    r.counit.resize(r.dim);
    for (uint64_t i = 0; i < a.dim; ++i)
        for (uint64_t j = 0; j < b.dim; ++j) r.counit[i * b.dim + j] = a.counit[i] * b.counit[j];
    r.antipode = a.antipode.tensor(b.antipode);
    if (a.star && b.star) r.star = a.star->tensor(*b.star);
    return r;
}

}  // namespace aqg
