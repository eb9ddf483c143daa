#include "aqg/gallery.hpp"

#include "aqg/error.hpp"

namespace aqg {

HopfData taft_algebra(uint32_t n) {
    if (n < 2) throw InvalidInput("taft_algebra needs n >= 2");
    const uint64_t dim = static_cast<uint64_t>(n) * n;
    Scalar zeta = Scalar::zeta(n);  // primitive by construction of Q(zeta_n)
    HopfData h;
    h.dim = dim;
    h.field = (n == 2) ? 1 : n;
    auto idx = [n](uint64_t i, uint64_t j) { return i * n + j; };
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j) {
            std::string s = "1";
            if (i) s = "g" + (i > 1 ? "^" + std::to_string(i) : "");
            if (j) {
                std::string xs = "x" + std::string(j > 1 ? "^" + std::to_string(j) : "");
                s = i ? s + xs : xs;
            }
            h.basis.push_back(s);
        }

    // (g^i x^j)(g^k x^l) = zeta^{jk} g^{i+k} x^{j+l}, zero once j+l >= n.
    h.mult.assign(dim * dim, FinVec(dim));
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j)
            for (uint64_t k = 0; k < n; ++k)
                for (uint64_t l = 0; l < n; ++l) {
                    if (j + l >= n) continue;
                    h.mult[idx(i, j) * dim + idx(k, l)] = FinVec::basis(
                        dim, idx((i + k) % n, j + l),
                        Scalar::zeta_pow(n, static_cast<long>(j * k)));
                }
    h.unit = FinVec::basis(dim, 0);

    // Coproduct: extend Delta(g) = g (x) g, Delta(x) = 1 (x) x + x (x) g
    // multiplicatively inside the tensor square.
    h.comult.assign(dim, FinVec(dim * dim));
    {
        FinVec dg = FinVec::basis(dim, idx(1, 0)).tensor(FinVec::basis(dim, idx(1, 0)));
        FinVec dx = FinVec::basis(dim, idx(0, 0)).tensor(FinVec::basis(dim, idx(0, 1))) +
                    FinVec::basis(dim, idx(0, 1)).tensor(FinVec::basis(dim, idx(1, 0)));
        for (uint64_t i = 0; i < n; ++i)
            for (uint64_t j = 0; j < n; ++j) {
                FinVec acc = h.unit.tensor(h.unit);
                for (uint64_t t = 0; t < i; ++t) acc = h.mul2(acc, dg);
                for (uint64_t t = 0; t < j; ++t) acc = h.mul2(acc, dx);
                h.comult[idx(i, j)] = std::move(acc);
            }
    }
    h.counit.assign(dim, Scalar::zero());
    for (uint64_t i = 0; i < n; ++i) h.counit[idx(i, 0)] = Scalar::one();

    // S(g) = g^{-1}, S(x) = -x g^{-1}; extend antimultiplicatively:
    // S(g^i x^j) = S(x)^j S(g)^i.
    h.antipode = LinMap(dim, dim);
    {
        FinVec sg = FinVec::basis(dim, idx(n - 1, 0));
        FinVec sx = h.mult[idx(0, 1) * dim + idx(n - 1, 0)].scaled(Scalar(-1));
        for (uint64_t i = 0; i < n; ++i)
            for (uint64_t j = 0; j < n; ++j) {
                FinVec acc = h.unit;
                for (uint64_t t = 0; t < j; ++t) acc = h.mul(acc, sx);
                for (uint64_t t = 0; t < i; ++t) acc = h.mul(acc, sg);
                h.antipode.set_col(idx(i, j), acc);
            }
    }

    // Star: g* = g, x* = x, hence (g^i x^j)* = x^j g^i = zeta^{ij} g^i x^j.
    LinMap st(dim, dim);
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j)
            st.set(idx(i, j), idx(i, j), Scalar::zeta_pow(n, static_cast<long>(i * j)));
    h.star = std::move(st);
    return h;
}

HopfData sweedler_algebra() { return taft_algebra(2); }

MatchedPair group_matched_pair(const Factorization& f) {
    if (!f.K->is_finite() || !f.H->is_finite())
        throw InvalidInput("group_matched_pair needs finite K and H");
    MatchedPair p;
    p.A = group_algebra(*f.H);
    p.B = function_algebra(*f.K);
    const uint64_t nA = p.A.dim, nB = p.B.dim;
    const auto& hs = f.H->elements();
    const auto& ks = f.K->elements();

    // delta_k <| h = delta_{h^{-1} |> k}.
    p.action.table.assign(nB * nA, FinVec(nB));
    for (uint64_t b = 0; b < nB; ++b)
        for (uint64_t a = 0; a < nA; ++a)
            p.action.table[b * nA + a] = FinVec::basis(
                nB, f.K->index_of(f.act_left(f.H->inv(hs[a]), ks[b])));

    // Gamma(h) = sum_k delta_k (x) (h <| k).
    p.coaction.gamma.assign(nA, FinVec(nB * nA));
    for (uint64_t a = 0; a < nA; ++a) {
        FinVec acc(nB * nA);
        for (uint64_t b = 0; b < nB; ++b)
            acc.add_to(b * nA + f.H->index_of(f.act_right(hs[a], ks[b])), Scalar::one());
        p.coaction.gamma[a] = std::move(acc);
    }
    return p;
}

MatchedPair mirror_pair(const HopfData& a) {
    MatchedPair p;
    p.A = a;
    p.B = coopposite(a);
    const uint64_t n = a.dim;

    // b <| a = sum S(a_(1)) b a_(2).
    p.action.table.assign(n * n, FinVec(n));
    for (uint64_t b = 0; b < n; ++b)
        for (uint64_t i = 0; i < n; ++i) {
            FinVec acc(n);
            for (const auto& [t, c] : a.comult[i].entries()) {
                auto [a1, a2] = untensor_index(t, n);
                acc += a.mul(a.mul(a.S(a.e(a1)), a.e(b)), a.e(a2)).scaled(c);
            }
            p.action.table[b * n + i] = std::move(acc);
        }

    // Gamma(a) = sum S(a_(1)) a_(3) (x) a_(2), via (Delta (x) id) Delta.
    p.coaction.gamma.assign(n, FinVec(n * n));
    for (uint64_t i = 0; i < n; ++i) {
        FinVec acc(n * n);
        for (const auto& [t, c] : a.comult[i].entries()) {
            auto [a12, a3] = untensor_index(t, n);
            for (const auto& [t2, c2] : a.comult[a12].entries()) {
                auto [a1, a2] = untensor_index(t2, n);
                FinVec left = a.mul(a.S(a.e(a1)), a.e(a3));
                for (const auto& e : left.entries())
                    acc.add_to(e.first * n + a2, c * c2 * e.second);
            }
        }
        p.coaction.gamma[i] = std::move(acc);
    }
    return p;
}

LinMap theta_iso(const MatchedPair& mirror, const Bicross& bx) {
    const HopfData& a = mirror.A;
    const uint64_t n = a.dim;
    LinMap th(bx.ab.dim, n * n);
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j) {
            FinVec acc(bx.ab.dim);
            for (const auto& [t, c] : a.comult[i].entries()) {
                auto [a1, a2] = untensor_index(t, n);
                FinVec right = a.mul(a.S(a.e(a2)), a.e(j));
                for (const auto& e : right.entries())
                    acc.add_to(a1 * n + e.first, c * e.second);
            }
            th.set_col(i * n + j, acc);
        }
    return th;
}

LinMap eta_iso(const MatchedPair2& mirror_dual, const Bicross& cd) {
    const HopfData& c = mirror_dual.C;
    const HopfData& d = mirror_dual.D;
    const uint64_t n = c.dim;
    if (d.dim != n) throw DimensionMismatch("eta_iso expects D = C^op");
    LinMap et(cd.ab.dim, n * n);
    for (uint64_t k = 0; k < n; ++k)
        for (uint64_t l = 0; l < n; ++l) {
            FinVec acc(cd.ab.dim);
            for (const auto& [t, cf] : d.comult[l].entries()) {
                auto [d1, d2] = untensor_index(t, n);
                // c d_(1) computed with the product of C.
                FinVec left = c.mul(c.e(k), c.e(d1));
                for (const auto& e : left.entries())
                    acc.add_to(e.first * n + d2, cf * e.second);
            }
            et.set_col(k * n + l, acc);
        }
    return et;
}

Report s_sharp_mirror_check(const MatchedPair& mirror, const Bicross& bx) {
    Report rep;
    const HopfData& a = mirror.A;
    const uint64_t n = a.dim;
    LinMap s_inv = invert(a.antipode);
    LinMap s2 = a.antipode.compose(a.antipode);

    bool ok = true;
    std::string w;
    for (uint64_t i = 0; ok && i < n; ++i)
        for (uint64_t j = 0; ok && j < n; ++j) {
            // sum S(a_(2)) # S^2(a_(1)) S^{-1}(b) S^{-1}(a_(3)).
            FinVec want(bx.ab.dim);
            for (const auto& [t, c] : a.comult[i].entries()) {
                auto [a12, a3] = untensor_index(t, n);
                for (const auto& [t2, c2] : a.comult[a12].entries()) {
                    auto [a1, a2] = untensor_index(t2, n);
                    FinVec right = a.mul(a.mul(s2.apply(a.e(a1)), s_inv.apply(a.e(j))),
                                         s_inv.apply(a.e(a3)));
                    FinVec left = a.S(a.e(a2));
                    for (const auto& el : left.entries())
                        for (const auto& er : right.entries())
                            want.add_to(el.first * n + er.first,
                                        c * c2 * el.second * er.second);
                }
            }
            if (bx.ab.antipode.col(i * n + j) != want) {
                ok = false;
                w = a.label(i) + " # " + a.label(j);
            }
        }
    rep.record("ex_4_3_s_sharp_formula", ok, w);

    // S_# o theta = theta o (S_A (x) S_B) with S_B = S_A^{-1}.
    LinMap th = theta_iso(mirror, bx);
    rep.record("ex_4_3_s_sharp_theta",
               bx.ab.antipode.compose(th) == th.compose(a.antipode.tensor(s_inv)),
               "S_# theta != theta (S (x) S^{-1})");
    return rep;
}

MatchedPair trivial_action_pair(const HopfData& a, const HopfData& b0, const HopfData& b1,
                                const std::vector<FinVec>& gamma1) {
    if (gamma1.size() != a.dim) throw DimensionMismatch("gamma1 must cover the basis of A");
    MatchedPair p;
    p.A = a;
    const uint64_t n1 = b1.dim;
    for (uint64_t i = 0; i < n1; ++i)
        for (uint64_t j = 0; j < n1; ++j)
            if (b1.mult[i * n1 + j] != b1.mult[j * n1 + i])
                throw InvalidInput("B1 must be commutative");
    p.B = tensor_hopf(b0, b1);
    const uint64_t nA = a.dim, nB = p.B.dim;

    p.action.table.assign(nB * nA, FinVec(nB));
    for (uint64_t b = 0; b < nB; ++b)
        for (uint64_t i = 0; i < nA; ++i)
            p.action.table[b * nA + i] = p.B.e(b).scaled(a.counit[i]);

    // Gamma(a) = 1_{B0} (x) Gamma1(a) re-indexed into (B0 (x) B1) (x) A.
    p.coaction.gamma.assign(nA, FinVec(nB * nA));
    for (uint64_t i = 0; i < nA; ++i) {
        FinVec acc(nB * nA);
        for (const auto& [t, c] : gamma1[i].entries()) {
            auto [u1, v] = untensor_index(t, nA);
            for (const auto& e0 : b0.unit.entries())
                acc.add_to((e0.first * n1 + u1) * nA + v, c * e0.second);
        }
        p.coaction.gamma[i] = std::move(acc);
    }
    return p;
}

std::vector<FinVec> automorphism_coaction(const HopfData& a, const Group& g,
                                          const std::vector<LinMap>& alphas) {
    if (!g.is_finite()) throw InvalidInput("automorphism_coaction needs finite G");
    const uint64_t ng = g.order(), nA = a.dim;
    if (alphas.size() != ng) throw DimensionMismatch("one automorphism per group element");
    std::vector<FinVec> gamma1(nA, FinVec(ng * nA));
    const auto& el = g.elements();
    for (uint64_t i = 0; i < nA; ++i) {
        FinVec acc(ng * nA);
        for (uint64_t pidx = 0; pidx < ng; ++pidx) {
            uint64_t pinv = g.index_of(g.inv(el[pidx]));
            for (const auto& e : alphas[pinv].col(i).entries())
                acc.add_to(pidx * nA + e.first, e.second);
        }
        gamma1[i] = std::move(acc);
    }
    return gamma1;
}

std::vector<Scalar> relative_invariance(const HopfData& a, const ModularData& mdA,
                                        const Group& g, const std::vector<LinMap>& alphas) {
    const uint64_t ng = g.order();
    std::vector<Scalar> nu(ng, Scalar::zero());
    for (uint64_t p = 0; p < ng; ++p) {
        FinVec composed = functional_compose(mdA.phi, alphas[p]);
        bool have = false;
        for (uint64_t i = 0; i < a.dim; ++i) {
            Scalar base = mdA.phi.get(i);
            Scalar val = composed.get(i);
            if (base.is_zero()) {
                if (!val.is_zero())
                    throw InvalidInput("phi o alpha_p not proportional to phi");
                continue;
            }
            Scalar t = val / base;
            if (!have) {
                nu[p] = t;
                have = true;
            } else if (nu[p] != t) {
                throw InvalidInput("relative invariance scalar not unique");
            }
        }
        if (!have) throw InvalidInput("phi vanishes");
        if (composed != mdA.phi.scaled(nu[p]))
            throw InvalidInput("phi o alpha_p not proportional to phi");
    }
    return nu;
}

Report trivial_coaction_check(const HopfData& a, const HopfData& b, const ActionData& action,
                              const VerifyOptions& opt) {
    Report rep;
    const uint64_t nA = a.dim, nB = b.dim;
    MatchedPair p;
    p.A = a;
    p.B = b;
    p.action = action;
    // Trivial coaction Gamma(a) = 1_B (x) a.
    p.coaction.gamma.assign(nA, FinVec(nB * nA));
    for (uint64_t i = 0; i < nA; ++i) {
        FinVec acc(nB * nA);
        for (const auto& e : b.unit.entries()) acc.add_to(e.first * nA + i, e.second);
        p.coaction.gamma[i] = std::move(acc);
    }

    {
        // Module bi-algebra: Delta_B(b <| a) = sum (b_(1) <| a_(1)) (x) (b_(2) <| a_(2)).
        bool ok = true;
        std::string w;
        for (uint64_t bb = 0; ok && bb < nB; ++bb)
            for (uint64_t aa = 0; ok && aa < nA; ++aa) {
                FinVec lhs = b.delta(action.table[bb * nA + aa]);
                FinVec rhs(nB * nB);
                for (const auto& [tb, cb] : b.comult[bb].entries()) {
                    auto [b1, b2] = untensor_index(tb, nB);
                    for (const auto& [ta, ca] : a.comult[aa].entries()) {
                        auto [a1, a2] = untensor_index(ta, nA);
                        rhs += action.table[b1 * nA + a1]
                                   .tensor(action.table[b2 * nA + a2])
                                   .scaled(cb * ca);
                    }
                }
                if (lhs != rhs) {
                    ok = false;
                    w = b.label(bb) + ", " + a.label(aa);
                }
            }
        rep.record("prop_4_13_module_bialgebra", ok, w);
    }
    rep.record("prop_4_13_r_equals_rop", twist_R(p) == twist_Rop(p), "R != R^op");
    if (rep.all_passed()) {
        Bicross bx = build_bicross(p);
        rep.merge(verify_matched(p, bx, opt), "prop_4_13_");
    }
    return rep;
}

Report fixed_point_check(const MatchedPair& p) {
    Report rep;
    const uint64_t nA = p.A.dim, nB = p.B.dim;

    // Gamma must be multiplicative for Prop 4.15 to apply.
    bool gamma_mult = true;
    std::string wg;
    for (uint64_t i = 0; gamma_mult && i < nA; ++i)
        for (uint64_t j = 0; gamma_mult && j < nA; ++j) {
            FinVec lhs = p.gamma_of(p.A.mult[i * nA + j]);
            // Gamma(a) Gamma(a') with legwise products in B (x) A.
            FinVec rhs(nB * nA);
            for (const auto& [t1, c1] : p.coaction.gamma[i].entries()) {
                auto [u1, v1] = untensor_index(t1, nA);
                for (const auto& [t2, c2] : p.coaction.gamma[j].entries()) {
                    auto [u2, v2] = untensor_index(t2, nA);
                    FinVec bu = p.B.mult[u1 * nB + u2];
                    FinVec av = p.A.mult[v1 * nA + v2];
                    for (const auto& eb : bu.entries())
                        for (const auto& ea : av.entries())
                            rhs.add_to(eb.first * nA + ea.first,
                                       c1 * c2 * eb.second * ea.second);
                }
            }
            if (lhs != rhs) {
                gamma_mult = false;
                wg = p.A.label(i) + ", " + p.A.label(j);
            }
        }
    rep.record("gamma_multiplicative", gamma_mult, wg);
    if (!gamma_mult) return rep;

    // Left leg of Gamma(A): span of (id (x) omega) Gamma(a) over basis
    // functionals omega.
    std::vector<FinVec> leg;
    for (uint64_t i = 0; i < nA; ++i) {
        std::vector<FinVec> slices(nA, FinVec(nB));
        for (const auto& [t, c] : p.coaction.gamma[i].entries()) {
            auto [u, v] = untensor_index(t, nA);
            slices[v].add_to(u, c);
        }
        for (auto& s : slices)
            if (!s.is_zero()) leg.push_back(std::move(s));
    }

    auto is_fixed = [&](const FinVec& m) -> std::pair<bool, std::string> {
        for (uint64_t aa = 0; aa < nA; ++aa)
            if (p.act(m, p.A.e(aa)) != m.scaled(p.A.counit[aa]))
                return {false, p.A.label(aa)};
        return {true, ""};
    };

    bool fixed = true;
    std::string wf;
    for (const auto& m : leg) {
        auto [ok, w] = is_fixed(m);
        if (!ok) {
            fixed = false;
            wf = w;
            break;
        }
    }
    rep.record("prop_4_15_left_leg_fixed", fixed, wf);

    bool closed = true;
    std::string wc;
    for (const auto& m1 : leg) {
        for (const auto& m2 : leg) {
            auto [ok, w] = is_fixed(p.B.mul(m1, m2));
            if (!ok) {
                closed = false;
                wc = w;
                break;
            }
        }
        if (!closed) break;
    }
    rep.record("fixed_points_closed_under_product", closed, wc);
    return rep;
}

Factorization nilpotent_matched_pair(int64_t p) {
    if (p < 2 || p > 13) throw InvalidInput("nilpotent_matched_pair expects a small prime");
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InvalidInput("p must be prime");
    GroupPtr h = heisenberg_group(p);
    GroupPtr k = heisenberg_group(p);
    auto m = [p](int64_t v) { return ((v % p) + p) % p; };
    // h = (a, b, c) upper unitriangular; k = (x, y, z) encodes the lower
    // unitriangular matrix with subdiagonal y, (3,1)-entry z, (3,2)-entry x.
    auto left = [m](const GroupElem& hh, const GroupElem& kk) -> GroupElem {
        return {kk[0], kk[1], m(kk[2] - hh[1] * kk[1])};
    };
    auto right = [m](const GroupElem& hh, const GroupElem& kk) -> GroupElem {
        return {hh[0], hh[1], m(hh[2] - kk[0] * hh[0])};
    };
    return matched_pair_factorization(k, h, left, right);
}

GroupElem nilpotent_theta(int64_t p, const GroupElem& h) {
    auto m = [p](int64_t v) { return ((v % p) + p) % p; };
    // theta(h) = (gamma(h))^{-1} with gamma = transpose: K-coords
    // (x, y, z) = (-b, -a, a b - c).
    return {m(-h[1]), m(-h[0]), m(h[0] * h[1] - h[2])};
}

GroupElem nilpotent_theta_prime(int64_t p, const GroupElem& k) {
    auto m = [p](int64_t v) { return ((v % p) + p) % p; };
    // theta'(k) = (gamma'(k))^{-1}: H-coords (a, b, c) = (-y, -x, x y - z).
    return {m(-k[1]), m(-k[0]), m(k[0] * k[1] - k[2])};
}

Factorization s3_factorization() {
    GroupPtr g = s3_group();
    // K = A_3 = {e, (123), (132)}, H = {e, (12)}.
    std::vector<GroupElem> ks = {{0}, {4}, {5}};
    std::vector<GroupElem> hs = {{0}, {1}};
    return subgroup_factorization(g, ks, hs, {"e", "(123)", "(132)"}, {"e", "(12)"});
}

Factorization z6_factorization() {
    GroupPtr g = cyclic_group(6);
    std::vector<GroupElem> ks = {{0}, {2}, {4}};
    std::vector<GroupElem> hs = {{0}, {3}};
    return subgroup_factorization(g, ks, hs, {"0", "2", "4"}, {"0", "3"});
}

Factorization dinfty_factorization() {
    GroupPtr k = z_group();
    // H = Z_2 acting by sign flip; <| keeps H fixed.
    std::vector<std::vector<uint64_t>> t = {{0, 1}, {1, 0}};
    GroupPtr h = std::make_shared<FiniteTableGroup>(t, std::vector<std::string>{"e", "s"});
    auto left = [](const GroupElem& hh, const GroupElem& kk) -> GroupElem {
        return {hh[0] == 1 ? -kk[0] : kk[0]};
    };
    auto right = [](const GroupElem& hh, const GroupElem& kk) -> GroupElem {
        (void)kk;
        return hh;
    };
    return matched_pair_factorization(k, h, left, right);
}

namespace {

MatchedPair trivial_action_aut_pair() {
    HopfData a = sweedler_algebra();
    // Z_2 acting by the order-2 Hopf automorphism g -> g, x -> -x.
    GroupPtr g2 = cyclic_group(2);
    std::vector<LinMap> alphas;
    alphas.push_back(LinMap::identity(4));
    LinMap flip(4, 4);
    flip.set(0, 0, Scalar::one());
    flip.set(1, 1, Scalar::one());
    flip.set(2, 2, Scalar(-1));
    flip.set(3, 3, Scalar(-1));
    alphas.push_back(flip);
    auto gamma1 = automorphism_coaction(a, *g2, alphas);
    HopfData b0 = group_algebra(*s3_group());
    HopfData b1 = function_algebra(*g2);
    return trivial_action_pair(a, b0, b1, gamma1);
}

}  // namespace

MatchedPair gallery_pair(const std::string& name) {
    if (name == "group-s3") return group_matched_pair(s3_factorization());
    if (name == "group-z6") return group_matched_pair(z6_factorization());
    if (name == "heisenberg-p3") return group_matched_pair(nilpotent_matched_pair(3));
    if (name == "mirror-sweedler") return mirror_pair(sweedler_algebra());
    if (name == "mirror-taft3") return mirror_pair(taft_algebra(3));
    if (name == "mirror-taft4") return mirror_pair(taft_algebra(4));
    if (name == "trivial-action-aut") return trivial_action_aut_pair();
    if (name == "mirror-z2") return mirror_pair(group_algebra(*cyclic_group(2)));
    if (name == "mirror-z3") return mirror_pair(group_algebra(*cyclic_group(3)));
    if (name == "mirror-z4") return mirror_pair(group_algebra(*cyclic_group(4)));
    if (name == "mirror-s3") return mirror_pair(group_algebra(*s3_group()));
    throw InvalidInput("unknown gallery pair: " + name);
}

std::vector<std::string> gallery_names() {
    return {"group-s3",        "group-z6",     "heisenberg-p3",
            "mirror-sweedler", "mirror-taft3", "trivial-action-aut"};
}

std::vector<std::string> gallery_names_all() {
    auto v = gallery_names();
    for (const auto& n :
         {"mirror-z2", "mirror-z3", "mirror-z4", "mirror-s3", "mirror-taft4"})
        v.push_back(n);
    return v;
}

}  // namespace aqg
