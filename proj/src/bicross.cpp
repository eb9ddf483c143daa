#include "aqg/bicross.hpp"

#include "aqg/error.hpp"

namespace aqg {

FinVec MatchedPair::act(const FinVec& b, const FinVec& a) const {
    FinVec r(B.dim);
    for (const auto& eb : b.entries())
        for (const auto& ea : a.entries())
            r += action.table[eb.first * A.dim + ea.first].scaled(eb.second * ea.second);
    return r;
}

FinVec MatchedPair::gamma_of(const FinVec& a) const {
    FinVec r(B.dim * A.dim);
    for (const auto& ea : a.entries()) r += coaction.gamma[ea.first].scaled(ea.second);
    return r;
}

namespace {

// b a = sum a_(1) (b <| a_(2)) in normal form, for FinVec inputs.
FinVec mul_ba(const MatchedPair& p, const FinVec& b, const FinVec& a) {
    const uint64_t nA = p.A.dim, nB = p.B.dim;
    FinVec r(nA * nB);
    for (const auto& ea : a.entries())
        for (const auto& [tidx, c] : p.A.comult[ea.first].entries()) {
            auto [a1, a2] = untensor_index(tidx, nA);
            for (const auto& eb : b.entries()) {
                const FinVec& moved = p.action.table[eb.first * nA + a2];
                if (moved.is_zero()) continue;
                r += FinVec::basis(nA, a1).tensor(moved).scaled(c * ea.second * eb.second);
            }
        }
    return r;
}

}  // namespace

LinMap twist_R(const MatchedPair& p) {
    const uint64_t nA = p.A.dim, nB = p.B.dim;
    LinMap r(nA * nB, nB * nA);
    for (uint64_t b = 0; b < nB; ++b)
        for (uint64_t a = 0; a < nA; ++a) {
            FinVec img(nA * nB);
            for (const auto& [tidx, c] : p.A.comult[a].entries()) {
                auto [a1, a2] = untensor_index(tidx, nA);
                img += FinVec::basis(nA, a1).tensor(p.action.table[b * nA + a2]).scaled(c);
            }
            r.set_col(b * nA + a, img);
        }
    return r;
}

LinMap twist_Rop(const MatchedPair& p) {
    const uint64_t nA = p.A.dim, nB = p.B.dim;
    LinMap r(nA * nB, nB * nA);
    for (uint64_t b = 0; b < nB; ++b)
        for (uint64_t a = 0; a < nA; ++a) {
            FinVec img(nA * nB);
            for (const auto& [tidx, c] : p.A.comult[a].entries()) {
                auto [a1, a2] = untensor_index(tidx, nA);
                img += FinVec::basis(nA, a2).tensor(p.action.table[b * nA + a1]).scaled(c);
            }
            r.set_col(b * nA + a, img);
        }
    return r;
}

LinMap cotwist_T(const MatchedPair& p) {
    // T(a (x) b) = Gamma(a)(b (x) 1)
    const uint64_t nA = p.A.dim, nB = p.B.dim;
    LinMap r(nB * nA, nA * nB);
    for (uint64_t a = 0; a < nA; ++a)
        for (uint64_t b = 0; b < nB; ++b) {
            FinVec img(nB * nA);
            for (const auto& [tidx, c] : p.coaction.gamma[a].entries()) {
                auto [u, v] = untensor_index(tidx, nA);
                img += p.B.mult[u * nB + b].tensor(FinVec::basis(nA, v)).scaled(c);
            }
            r.set_col(a * nB + b, img);
        }
    return r;
}

LinMap cotwist_Top(const MatchedPair& p) {
    // T^op(a (x) b) = (b (x) 1) Gamma(a)
    const uint64_t nA = p.A.dim, nB = p.B.dim;
    LinMap r(nB * nA, nA * nB);
    for (uint64_t a = 0; a < nA; ++a)
        for (uint64_t b = 0; b < nB; ++b) {
            FinVec img(nB * nA);
            for (const auto& [tidx, c] : p.coaction.gamma[a].entries()) {
                auto [u, v] = untensor_index(tidx, nA);
                img += p.B.mult[b * nB + u].tensor(FinVec::basis(nA, v)).scaled(c);
            }
            r.set_col(a * nB + b, img);
        }
    return r;
}

Bicross build_bicross(const MatchedPair& p) {
    const uint64_t nA = p.A.dim, nB = p.B.dim;
    const uint64_t n = nA * nB;
    Bicross bx;
    bx.dim_a = nA;
    bx.dim_b = nB;
    HopfData& h = bx.ab;
    h.dim = n;
    h.field = p.field();
    h.basis.reserve(n);
    for (uint64_t i = 0; i < nA; ++i)
        for (uint64_t j = 0; j < nB; ++j) h.basis.push_back(p.A.basis[i] + "#" + p.B.basis[j]);

    // (a_i # b_j)(a_k # b_l) = sum a_i a_(1) # (b_j <| a_(2)) b_l over Delta(a_k).
    h.mult.assign(n * n, FinVec(n));
    for (uint64_t i = 0; i < nA; ++i)
        for (uint64_t j = 0; j < nB; ++j)
            for (uint64_t k = 0; k < nA; ++k)
                for (uint64_t l = 0; l < nB; ++l) {
                    FinVec acc(n);
                    for (const auto& [tidx, c] : p.A.comult[k].entries()) {
                        auto [a1, a2] = untensor_index(tidx, nA);
                        const FinVec& left = p.A.mult[i * nA + a1];
                        if (left.is_zero()) continue;
                        FinVec right = p.B.mul(p.action.table[j * nA + a2], p.B.e(l));
                        if (right.is_zero()) continue;
                        acc += left.tensor(right).scaled(c);
                    }
                    h.mult[(i * nB + j) * n + (k * nB + l)] = std::move(acc);
                }
    h.unit = p.A.unit.tensor(p.B.unit);
    bx.unit_a = p.A.unit;
    bx.unit_b = p.B.unit;

    // Delta_#(a_i # b_j) = sum (a_(1) # Gamma^1(a_(2)) b_(1)) (x) (Gamma^2(a_(2)) # b_(2)).
    h.comult.assign(n, FinVec(n * n));
    for (uint64_t i = 0; i < nA; ++i)
        for (uint64_t j = 0; j < nB; ++j) {
            FinVec acc(n * n);
            for (const auto& [ta, ca] : p.A.comult[i].entries()) {
                auto [a1, a2] = untensor_index(ta, nA);
                for (const auto& [tg, cg] : p.coaction.gamma[a2].entries()) {
                    auto [u, v] = untensor_index(tg, nA);
                    for (const auto& [tb, cb] : p.B.comult[j].entries()) {
                        auto [b1, b2] = untensor_index(tb, nB);
                        const FinVec& bprod = p.B.mult[u * nB + b1];
                        if (bprod.is_zero()) continue;
                        Scalar coef = ca * cg * cb;
                        for (const auto& eb : bprod.entries())
                            acc.add_to((a1 * nB + eb.first) * n + (v * nB + b2),
                                       coef * eb.second);
                    }
                }
            }
            h.comult[i * nB + j] = std::move(acc);
        }

    h.counit.resize(n);
    for (uint64_t i = 0; i < nA; ++i)
        for (uint64_t j = 0; j < nB; ++j) h.counit[i * nB + j] = p.A.counit[i] * p.B.counit[j];

    // S_#(a_i # b_j) = sum S_B(a_(-1) b_j) S_A(a_(0)) over Gamma(a_i).
    h.antipode = LinMap(n, n);
    for (uint64_t i = 0; i < nA; ++i)
        for (uint64_t j = 0; j < nB; ++j) {
            FinVec acc(n);
            for (const auto& [tg, cg] : p.coaction.gamma[i].entries()) {
                auto [u, v] = untensor_index(tg, nA);
                FinVec sb = p.B.S(p.B.mult[u * nB + j]);
                if (sb.is_zero()) continue;
                acc += mul_ba(p, sb, p.A.S(p.A.e(v))).scaled(cg);
            }
            h.antipode.set_col(i * nB + j, acc);
        }

    if (p.has_star()) {
        // (a b)^* = b^* a^*, antilinear.
        LinMap st(n, n);
        for (uint64_t i = 0; i < nA; ++i)
            for (uint64_t j = 0; j < nB; ++j)
                st.set_col(i * nB + j,
                           mul_ba(p, p.B.star_of(p.B.e(j)), p.A.star_of(p.A.e(i))));
        h.star = std::move(st);
    }
    return bx;
}

Report verify_matched(const MatchedPair& p, const Bicross& bx, const VerifyOptions& opt) {
    Report rep;
    const uint64_t nA = p.A.dim, nB = p.B.dim;

    {
        bool ok = true;
        std::string w;
        for (uint64_t b = 0; ok && b < nB; ++b)
            if (p.act(p.B.e(b), p.A.unit) != p.B.e(b)) {
                ok = false;
                w = p.B.label(b);
            }
        for (uint64_t a = 0; ok && a < nA; ++a)
            if (p.act(p.B.unit, p.A.e(a)) != p.B.unit.scaled(p.A.counit[a])) {
                ok = false;
                w = p.A.label(a);
            }
        rep.record("action_unital", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (uint64_t b = 0; ok && b < nB; ++b)
            for (uint64_t a1 = 0; ok && a1 < nA; ++a1)
                for (uint64_t a2 = 0; ok && a2 < nA; ++a2) {
                    FinVec lhs = p.act(p.action.table[b * nA + a1], p.A.e(a2));
                    FinVec rhs = p.act(p.B.e(b), p.A.mult[a1 * nA + a2]);
                    if (lhs != rhs) {
                        ok = false;
                        w = p.B.label(b) + ", " + p.A.label(a1) + ", " + p.A.label(a2);
                    }
                }
        rep.record("action_module", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (uint64_t b1 = 0; ok && b1 < nB; ++b1)
            for (uint64_t b2 = 0; ok && b2 < nB; ++b2)
                for (uint64_t a = 0; ok && a < nA; ++a) {
                    FinVec lhs = p.act(p.B.mult[b1 * nB + b2], p.A.e(a));
                    FinVec rhs(nB);
                    for (const auto& [t, c] : p.A.comult[a].entries()) {
                        auto [x, y] = untensor_index(t, nA);
                        rhs += p.B.mul(p.action.table[b1 * nA + x], p.action.table[b2 * nA + y])
                                   .scaled(c);
                    }
                    if (lhs != rhs) {
                        ok = false;
                        w = p.B.label(b1) + ", " + p.B.label(b2) + ", " + p.A.label(a);
                    }
                }
        rep.record("action_module_algebra", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (uint64_t b = 0; ok && b < nB; ++b)
            for (uint64_t a = 0; ok && a < nA; ++a)
                if (p.B.eps(p.action.table[b * nA + a]) != p.B.counit[b] * p.A.counit[a]) {
                    ok = false;
                    w = p.B.label(b) + ", " + p.A.label(a);
                }
        rep.record("action_counit", ok, w);
    }
    {
        // (eps_B (x) id) Gamma = id and (id (x) eps_A) Gamma(a) = eps_A(a) 1_B.
        bool ok = true;
        std::string w;
        for (uint64_t a = 0; ok && a < nA; ++a) {
            FinVec l(nA), r(nB);
            for (const auto& [t, c] : p.coaction.gamma[a].entries()) {
                auto [u, v] = untensor_index(t, nA);
                l.add_to(v, c * p.B.counit[u]);
                r.add_to(u, c * p.A.counit[v]);
            }
            if (l != p.A.e(a) || r != p.B.unit.scaled(p.A.counit[a])) {
                ok = false;
                w = p.A.label(a);
            }
        }
        rep.record("coaction_counit", ok, w);
    }
    {
        // (Delta_B (x) id) Gamma = (id (x) Gamma) Gamma in B (x) B (x) A.
        bool ok = true;
        std::string w;
        for (uint64_t a = 0; ok && a < nA; ++a) {
            FinVec lhs(nB * nB * nA), rhs(nB * nB * nA);
            for (const auto& [t, c] : p.coaction.gamma[a].entries()) {
                auto [u, v] = untensor_index(t, nA);
                for (const auto& [tb, cb] : p.B.comult[u].entries()) {
                    auto [s, q] = untensor_index(tb, nB);
                    lhs.add_to((s * nB + q) * nA + v, c * cb);
                }
                for (const auto& [tg, cg] : p.coaction.gamma[v].entries()) {
                    auto [w2, z] = untensor_index(tg, nA);
                    rhs.add_to((u * nB + w2) * nA + z, c * cg);
                }
            }
            if (lhs != rhs) {
                ok = false;
                w = p.A.label(a);
            }
        }
        rep.record("coaction_coassoc", ok, w);
    }
    {
        // (id (x) Delta_A) Gamma(a) = sum Gamma_12(a_(1)) Gamma_13(a_(2)) in B (x) A (x) A.
        bool ok = true;
        std::string w;
        for (uint64_t a = 0; ok && a < nA; ++a) {
            FinVec lhs(nB * nA * nA), rhs(nB * nA * nA);
            for (const auto& [t, c] : p.coaction.gamma[a].entries()) {
                auto [u, v] = untensor_index(t, nA);
                for (const auto& [ta, ca] : p.A.comult[v].entries()) {
                    auto [x, y] = untensor_index(ta, nA);
                    lhs.add_to((u * nA + x) * nA + y, c * ca);
                }
            }
            for (const auto& [ta, ca] : p.A.comult[a].entries()) {
                auto [a1, a2] = untensor_index(ta, nA);
                for (const auto& [t1, c1] : p.coaction.gamma[a1].entries()) {
                    auto [u1, v1] = untensor_index(t1, nA);
                    for (const auto& [t2, c2] : p.coaction.gamma[a2].entries()) {
                        auto [u2, v2] = untensor_index(t2, nA);
                        const FinVec& bprod = p.B.mult[u1 * nB + u2];
                        for (const auto& eb : bprod.entries())
                            rhs.add_to((eb.first * nA + v1) * nA + v2,
                                       ca * c1 * c2 * eb.second);
                    }
                }
            }
            if (lhs != rhs) {
                ok = false;
                w = p.A.label(a);
            }
        }
        rep.record("comodule_coalgebra", ok, w);
    }
    {
        // Cross relation: sum (b <| a_(1) (x) 1) Gamma(a_(2)) = sum Gamma(a_(1)) (b <| a_(2) (x) 1).
        bool ok = true;
        std::string w;
        for (uint64_t a = 0; ok && a < nA; ++a)
            for (uint64_t b = 0; ok && b < nB; ++b) {
                FinVec lhs(nB * nA), rhs(nB * nA);
                for (const auto& [ta, ca] : p.A.comult[a].entries()) {
                    auto [a1, a2] = untensor_index(ta, nA);
                    const FinVec& moved1 = p.action.table[b * nA + a1];
                    for (const auto& [tg, cg] : p.coaction.gamma[a2].entries()) {
                        auto [u, v] = untensor_index(tg, nA);
                        for (const auto& em : moved1.entries()) {
                            const FinVec& bp = p.B.mult[em.first * nB + u];
                            for (const auto& eb : bp.entries())
                                lhs.add_to(eb.first * nA + v,
                                           ca * cg * em.second * eb.second);
                        }
                    }
                    const FinVec& moved2 = p.action.table[b * nA + a2];
                    for (const auto& [tg, cg] : p.coaction.gamma[a1].entries()) {
                        auto [u, v] = untensor_index(tg, nA);
                        for (const auto& em : moved2.entries()) {
                            const FinVec& bp = p.B.mult[u * nB + em.first];
                            for (const auto& eb : bp.entries())
                                rhs.add_to(eb.first * nA + v,
                                           ca * cg * em.second * eb.second);
                        }
                    }
                }
                if (lhs != rhs) {
                    ok = false;
                    w = p.A.label(a) + ", " + p.B.label(b);
                }
            }
        rep.record("cross_relation", ok, w);
    }
    {
        LinMap R = twist_R(p), Rop = twist_Rop(p);
        LinMap T = cotwist_T(p), Top = cotwist_Top(p);
        bool r_bij = true, t_bij = true;
        try {
            invert(R);
        } catch (const SingularMap&) {
            r_bij = false;
        }
        try {
            invert(T);
        } catch (const SingularMap&) {
            t_bij = false;
        }
        rep.record("twist_R_bijective", r_bij, "R singular");
        rep.record("cotwist_T_bijective", t_bij, "T singular");
        rep.record("p_equality", T.compose(R) == Top.compose(Rop),
                   "T o R != T^op o R^op on B (x) A");
    }

    // Hopf axioms of (AB, Delta_#): associativity and the homomorphism
    // property of Delta_# are the operational matching criterion.
    rep.merge(verify_hopf(bx.ab, opt), "ab_");

    {
        // eps_# o S_# = eps_# and S_# antimultiplicative.
        const HopfData& h = bx.ab;
        bool ok = true;
        std::string w;
        for (uint64_t x = 0; ok && x < h.dim; ++x)
            if (h.eps(h.antipode.col(x)) != h.counit[x]) {
                ok = false;
                w = h.label(x);
            }
        rep.record("eps_s_sharp", ok, w);

        ok = true;
        w.clear();
        std::string mode = for_pairs(h.dim, 12, opt, [&](uint64_t x, uint64_t y) {
            if (h.S(h.mult[x * h.dim + y]) !=
                h.mul(h.antipode.col(y), h.antipode.col(x))) {
                ok = false;
                w = h.label(x) + ", " + h.label(y);
                return false;
            }
            return true;
        });
        rep.record("s_sharp_antimultiplicative", ok, w, mode);
    }
    {
        // Embedding consistency of Delta_#.
        const HopfData& h = bx.ab;
        const uint64_t n = h.dim;
        bool ok = true;
        std::string w;
        for (uint64_t j = 0; ok && j < nB; ++j) {
            FinVec want(n * n);
            for (const auto& [tb, cb] : p.B.comult[j].entries()) {
                auto [b1, b2] = untensor_index(tb, nB);
                want += bx.embed_b(p.B.e(b1)).tensor(bx.embed_b(p.B.e(b2))).scaled(cb);
            }
            if (h.delta(bx.embed_b(p.B.e(j))) != want) {
                ok = false;
                w = p.B.label(j);
            }
        }
        rep.record("embed_b_coproduct", ok, w);

        ok = true;
        w.clear();
        for (uint64_t i = 0; ok && i < nA; ++i) {
            FinVec want(n * n);
            for (const auto& [ta, ca] : p.A.comult[i].entries()) {
                auto [a1, a2] = untensor_index(ta, nA);
                for (const auto& [tg, cg] : p.coaction.gamma[a2].entries()) {
                    auto [u, v] = untensor_index(tg, nA);
                    want += FinVec::basis(nA, a1)
                                .tensor(p.B.e(u))
                                .tensor(bx.embed_a(p.A.e(v)))
                                .scaled(ca * cg);
                }
            }
            if (h.delta(bx.embed_a(p.A.e(i))) != want) {
                ok = false;
                w = p.A.label(i);
            }
        }
        rep.record("embed_a_coproduct", ok, w);
    }
    return rep;
}

FinVec MatchedPair2::act(const FinVec& d, const FinVec& c) const {
    FinVec r(C.dim);
    for (const auto& ed : d.entries())
        for (const auto& ec : c.entries())
            r += action[ed.first * C.dim + ec.first].scaled(ed.second * ec.second);
    return r;
}

FinVec MatchedPair2::gamma_of(const FinVec& d) const {
    FinVec r(D.dim * C.dim);
    for (const auto& ed : d.entries()) r += coaction[ed.first].scaled(ed.second);
    return r;
}

LinMap twist2_R(const MatchedPair2& p) {
    // R(d (x) c) = sum (d_(1) |> c) (x) d_(2).
    const uint64_t nC = p.C.dim, nD = p.D.dim;
    LinMap r(nC * nD, nD * nC);
    for (uint64_t d = 0; d < nD; ++d)
        for (uint64_t c = 0; c < nC; ++c) {
            FinVec img(nC * nD);
            for (const auto& [t, cf] : p.D.comult[d].entries()) {
                auto [d1, d2] = untensor_index(t, nD);
                img += p.action[d1 * nC + c].tensor(FinVec::basis(nD, d2)).scaled(cf);
            }
            r.set_col(d * nC + c, img);
        }
    return r;
}

LinMap twist2_Rop(const MatchedPair2& p) {
    // R^op(d (x) c) = sum (d_(2) |> c) (x) d_(1).
    const uint64_t nC = p.C.dim, nD = p.D.dim;
    LinMap r(nC * nD, nD * nC);
    for (uint64_t d = 0; d < nD; ++d)
        for (uint64_t c = 0; c < nC; ++c) {
            FinVec img(nC * nD);
            for (const auto& [t, cf] : p.D.comult[d].entries()) {
                auto [d1, d2] = untensor_index(t, nD);
                img += p.action[d2 * nC + c].tensor(FinVec::basis(nD, d1)).scaled(cf);
            }
            r.set_col(d * nC + c, img);
        }
    return r;
}

LinMap cotwist2_T(const MatchedPair2& p) {
    // T(c (x) d) = (1 (x) c) Gamma(d) in D (x) C.
    const uint64_t nC = p.C.dim, nD = p.D.dim;
    LinMap r(nD * nC, nC * nD);
    for (uint64_t c = 0; c < nC; ++c)
        for (uint64_t d = 0; d < nD; ++d) {
            FinVec img(nD * nC);
            for (const auto& [t, cf] : p.coaction[d].entries()) {
                auto [w, z] = untensor_index(t, nC);
                img += FinVec::basis(nD, w).tensor(p.C.mult[c * nC + z]).scaled(cf);
            }
            r.set_col(c * nD + d, img);
        }
    return r;
}

LinMap cotwist2_Top(const MatchedPair2& p) {
    // T^op(c (x) d) = Gamma(d) (1 (x) c).
    const uint64_t nC = p.C.dim, nD = p.D.dim;
    LinMap r(nD * nC, nC * nD);
    for (uint64_t c = 0; c < nC; ++c)
        for (uint64_t d = 0; d < nD; ++d) {
            FinVec img(nD * nC);
            for (const auto& [t, cf] : p.coaction[d].entries()) {
                auto [w, z] = untensor_index(t, nC);
                img += FinVec::basis(nD, w).tensor(p.C.mult[z * nC + c]).scaled(cf);
            }
            r.set_col(c * nD + d, img);
        }
    return r;
}

Bicross build_bicross2(const MatchedPair2& p, const LinMap& antipode,
                       const std::optional<LinMap>& star) {
    const uint64_t nC = p.C.dim, nD = p.D.dim;
    const uint64_t n = nC * nD;
    Bicross bx;
    bx.dim_a = nC;
    bx.dim_b = nD;
    HopfData& h = bx.ab;
    h.dim = n;
    h.field = std::max(p.C.field, p.D.field);
    h.basis.reserve(n);
    for (uint64_t i = 0; i < nC; ++i)
        for (uint64_t j = 0; j < nD; ++j) h.basis.push_back(p.C.basis[i] + "#" + p.D.basis[j]);

    // (c_i # d_j)(c_k # d_l) = sum c_i (d_(1) |> c_k) # d_(2) d_l.
    h.mult.assign(n * n, FinVec(n));
    for (uint64_t i = 0; i < nC; ++i)
        for (uint64_t j = 0; j < nD; ++j)
            for (uint64_t k = 0; k < nC; ++k)
                for (uint64_t l = 0; l < nD; ++l) {
                    FinVec acc(n);
                    for (const auto& [t, cf] : p.D.comult[j].entries()) {
                        auto [d1, d2] = untensor_index(t, nD);
                        FinVec left = p.C.mul(p.C.e(i), p.action[d1 * nC + k]);
                        if (left.is_zero()) continue;
                        const FinVec& right = p.D.mult[d2 * nD + l];
                        if (right.is_zero()) continue;
                        acc += left.tensor(right).scaled(cf);
                    }
                    h.mult[(i * nD + j) * n + (k * nD + l)] = std::move(acc);
                }
    h.unit = p.C.unit.tensor(p.D.unit);
    bx.unit_a = p.C.unit;
    bx.unit_b = p.D.unit;

    // Delta_#(c_i # d_j) = sum (c_(1) # Gamma^1(d_(1))) (x) (c_(2) Gamma^2(d_(1)) # d_(2)).
    h.comult.assign(n, FinVec(n * n));
    for (uint64_t i = 0; i < nC; ++i)
        for (uint64_t j = 0; j < nD; ++j) {
            FinVec acc(n * n);
            for (const auto& [tc, cc] : p.C.comult[i].entries()) {
                auto [c1, c2] = untensor_index(tc, nC);
                for (const auto& [td, cd] : p.D.comult[j].entries()) {
                    auto [d1, d2] = untensor_index(td, nD);
                    for (const auto& [tg, cg] : p.coaction[d1].entries()) {
                        auto [w, z] = untensor_index(tg, nC);
                        const FinVec& cz = p.C.mult[c2 * nC + z];
                        if (cz.is_zero()) continue;
                        Scalar coef = cc * cd * cg;
                        for (const auto& ec : cz.entries())
                            acc.add_to((c1 * nD + w) * n + (ec.first * nD + d2),
                                       coef * ec.second);
                    }
                }
            }
            h.comult[i * nD + j] = std::move(acc);
        }

    h.counit.resize(n);
    for (uint64_t i = 0; i < nC; ++i)
        for (uint64_t j = 0; j < nD; ++j) h.counit[i * nD + j] = p.C.counit[i] * p.D.counit[j];

    h.antipode = antipode;
    if (star) h.star = star;
    return bx;
}

Report verify_matched2(const MatchedPair2& p, const Bicross& cd, const VerifyOptions& opt) {
    Report rep;
    const uint64_t nC = p.C.dim, nD = p.D.dim;

    {
        // Left action laws: 1 |> c = c, d |> 1 = eps(d) 1, (d d') |> c = d |> (d' |> c).
        bool ok = true;
        std::string w;
        for (uint64_t c = 0; ok && c < nC; ++c)
            if (p.act(p.D.unit, p.C.e(c)) != p.C.e(c)) {
                ok = false;
                w = p.C.label(c);
            }
        for (uint64_t d = 0; ok && d < nD; ++d)
            if (p.act(p.D.e(d), p.C.unit) != p.C.unit.scaled(p.D.counit[d])) {
                ok = false;
                w = p.D.label(d);
            }
        for (uint64_t d1 = 0; ok && d1 < nD; ++d1)
            for (uint64_t d2 = 0; ok && d2 < nD; ++d2)
                for (uint64_t c = 0; ok && c < nC; ++c)
                    if (p.act(p.D.mult[d1 * nD + d2], p.C.e(c)) !=
                        p.act(p.D.e(d1), p.action[d2 * nC + c])) {
                        ok = false;
                        w = p.D.label(d1) + ", " + p.D.label(d2) + ", " + p.C.label(c);
                    }
        rep.record("action2_module", ok, w);
    }
    {
        // Module algebra: d |> (c c') = sum (d_(1) |> c)(d_(2) |> c').
        bool ok = true;
        std::string w;
        for (uint64_t d = 0; ok && d < nD; ++d)
            for (uint64_t c1 = 0; ok && c1 < nC; ++c1)
                for (uint64_t c2 = 0; ok && c2 < nC; ++c2) {
                    FinVec lhs = p.act(p.D.e(d), p.C.mult[c1 * nC + c2]);
                    FinVec rhs(nC);
                    for (const auto& [t, cf] : p.D.comult[d].entries()) {
                        auto [x, y] = untensor_index(t, nD);
                        rhs += p.C.mul(p.action[x * nC + c1], p.action[y * nC + c2]).scaled(cf);
                    }
                    if (lhs != rhs) {
                        ok = false;
                        w = p.D.label(d) + ", " + p.C.label(c1) + ", " + p.C.label(c2);
                    }
                }
        rep.record("action2_module_algebra", ok, w);
    }
    {
        // Counit of the action: eps_C(d |> c) = eps_D(d) eps_C(c).
        bool ok = true;
        std::string w;
        for (uint64_t d = 0; ok && d < nD; ++d)
            for (uint64_t c = 0; ok && c < nC; ++c)
                if (p.C.eps(p.action[d * nC + c]) != p.D.counit[d] * p.C.counit[c]) {
                    ok = false;
                    w = p.D.label(d) + ", " + p.C.label(c);
                }
        rep.record("action2_counit", ok, w);
    }
    {
        // Right comodule coalgebra: (id (x) eps_C) Gamma = id,
        // (id (x) Delta_C) Gamma = (Gamma (x) id) Gamma,
        // (Delta_D (x) id) Gamma(d) = sum Gamma_13(d_(1)) Gamma_23(d_(2)),
        // (eps_D (x) id) Gamma(d) = eps_D(d) 1_C.
        bool ok = true;
        std::string w;
        for (uint64_t d = 0; ok && d < nD; ++d) {
            FinVec keep(nD), one_c(nC);
            for (const auto& [t, cf] : p.coaction[d].entries()) {
                auto [u, v] = untensor_index(t, nC);
                keep.add_to(u, cf * p.C.counit[v]);
                one_c.add_to(v, cf * p.D.counit[u]);
            }
            if (keep != p.D.e(d) || one_c != p.C.unit.scaled(p.D.counit[d])) {
                ok = false;
                w = p.D.label(d);
            }
        }
        rep.record("coaction2_counit", ok, w);

        ok = true;
        w.clear();
        for (uint64_t d = 0; ok && d < nD; ++d) {
            FinVec lhs(nD * nC * nC), rhs(nD * nC * nC);
            for (const auto& [t, cf] : p.coaction[d].entries()) {
                auto [u, v] = untensor_index(t, nC);
                for (const auto& [tc, cc] : p.C.comult[v].entries()) {
                    auto [x, y] = untensor_index(tc, nC);
                    lhs.add_to((u * nC + x) * nC + y, cf * cc);
                }
                for (const auto& [tg, cg] : p.coaction[u].entries()) {
                    auto [u2, v2] = untensor_index(tg, nC);
                    rhs.add_to((u2 * nC + v2) * nC + v, cf * cg);
                }
            }
            if (lhs != rhs) {
                ok = false;
                w = p.D.label(d);
            }
        }
        rep.record("coaction2_coassoc", ok, w);

        ok = true;
        w.clear();
        for (uint64_t d = 0; ok && d < nD; ++d) {
            FinVec lhs(nD * nD * nC), rhs(nD * nD * nC);
            for (const auto& [t, cf] : p.coaction[d].entries()) {
                auto [u, v] = untensor_index(t, nC);
                for (const auto& [td, cdd] : p.D.comult[u].entries()) {
                    auto [x, y] = untensor_index(td, nD);
                    lhs.add_to((x * nD + y) * nC + v, cf * cdd);
                }
            }
            for (const auto& [td, cdd] : p.D.comult[d].entries()) {
                auto [d1, d2] = untensor_index(td, nD);
                for (const auto& [t1, c1] : p.coaction[d1].entries()) {
                    auto [u1, v1] = untensor_index(t1, nC);
                    for (const auto& [t2, c2] : p.coaction[d2].entries()) {
                        auto [u2, v2] = untensor_index(t2, nC);
                        const FinVec& cprod = p.C.mult[v1 * nC + v2];
                        for (const auto& ec : cprod.entries())
                            rhs.add_to((u1 * nD + u2) * nC + ec.first,
                                       cdd * c1 * c2 * ec.second);
                    }
                }
            }
            if (lhs != rhs) {
                ok = false;
                w = p.D.label(d);
            }
        }
        rep.record("comodule2_coalgebra", ok, w);
    }
    {
        // P = T o R = T^op o R^op plus the two compatibility equations of the
        // second-type matching criterion.
        LinMap R = twist2_R(p), Rop = twist2_Rop(p);
        LinMap T = cotwist2_T(p), Top = cotwist2_Top(p);
        LinMap P = Top.compose(Rop);
        rep.record("p2_equality", P == T.compose(R), "T o R != T^op o R^op on D (x) C");

        bool r_bij = true, t_bij = true;
        try {
            invert(R);
        } catch (const SingularMap&) {
            r_bij = false;
        }
        try {
            invert(T);
        } catch (const SingularMap&) {
            t_bij = false;
        }
        rep.record("twist2_bijective", r_bij && t_bij, "twist map singular");

        // P(m_D (x) id) = (m_D (x) id) P_13 P_23 on D (x) D (x) C.
        bool ok = true;
        std::string w;
        for (uint64_t d1 = 0; ok && d1 < nD; ++d1)
            for (uint64_t d2 = 0; ok && d2 < nD; ++d2)
                for (uint64_t c = 0; ok && c < nC; ++c) {
                    FinVec in = FinVec::basis(nD, d1)
                                    .tensor(FinVec::basis(nD, d2))
                                    .tensor(FinVec::basis(nC, c));
                    FinVec lhs(nD * nC);
                    for (const auto& em : p.D.mult[d1 * nD + d2].entries())
                        lhs += P.apply(FinVec::basis(nD, em.first)
                                           .tensor(FinVec::basis(nC, c)))
                                   .scaled(em.second);
                    FinVec mid = apply_on_legs(P, nD, nC, nD, nC, in, {nD, nD, nC}, 0, 2);
                    mid = apply_on_legs(P, nD, nC, nD, nC, mid, {nD, nD, nC}, 1, 2);
                    FinVec rhs(nD * nC);
                    for (const auto& em : mid.entries()) {
                        uint64_t cpart = em.first % nC;
                        uint64_t rest = em.first / nC;
                        uint64_t x = rest / nD, y = rest % nD;
                        for (const auto& ed : p.D.mult[x * nD + y].entries())
                            rhs.add_to(ed.first * nC + cpart, em.second * ed.second);
                    }
                    if (lhs != rhs) {
                        ok = false;
                        w = p.D.label(d1) + ", " + p.D.label(d2) + ", " + p.C.label(c);
                    }
                }
        rep.record("p2_product_compat", ok, w);

        // (id (x) Delta_C) P = P_12 P_13 (id (x) Delta_C) on D (x) C.
        ok = true;
        w.clear();
        LinMap dc(nC * nC, nC);
        for (uint64_t c = 0; c < nC; ++c) dc.set_col(c, p.C.comult[c]);
        for (uint64_t d = 0; ok && d < nD; ++d)
            for (uint64_t c = 0; ok && c < nC; ++c) {
                FinVec pv = P.apply(FinVec::basis(nD, d).tensor(FinVec::basis(nC, c)));
                FinVec lhs = apply_on_legs(dc, nC, 1, nC * nC, 1, pv, {nD, nC, 1}, 1, 2);
                // lhs currently sits in D (x) (C (x) C) = D (x) C (x) C.
                FinVec start = apply_on_legs(dc, nC, 1, nC * nC, 1,
                                             FinVec::basis(nD, d).tensor(FinVec::basis(nC, c)),
                                             {nD, nC, 1}, 1, 2);
                FinVec rhs = apply_on_legs(P, nD, nC, nD, nC, start, {nD, nC, nC}, 0, 2);
                rhs = apply_on_legs(P, nD, nC, nD, nC, rhs, {nD, nC, nC}, 0, 1);
                if (lhs != rhs) {
                    ok = false;
                    w = p.D.label(d) + ", " + p.C.label(c);
                }
            }
        rep.record("p2_coproduct_compat", ok, w);
    }

    rep.merge(verify_hopf(cd.ab, opt), "cd_");
    return rep;
}

}  // namespace aqg
