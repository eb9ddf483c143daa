#include "aqg/modular.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace aqg {

FinVec functional_compose(const FinVec& f, const LinMap& m) {
    // (f o m)(e_j) = f(m e_j)
    FinVec r(m.cols());
    for (uint64_t j = 0; j < m.cols(); ++j) r.set(j, m.col(j).pair(f));
    return r;
}

namespace {

Scalar apply_functional(const FinVec& f, const FinVec& x) { return x.pair(f); }

// Normalize a 1-dimensional solution ray so its first nonzero coordinate in
// basis order equals 1. Determinism of every downstream value hangs on this.
FinVec normalize_ray(const FinVec& v) {
    auto [idx, c] = v.leading();
    (void)idx;
    return v.scaled(c.inverse());
}

}  // namespace

ModularData find_integrals(const HopfData& h) {
    const uint64_t n = h.dim;
    ModularData md;

    // Right invariance: (psi (x) id) Delta(a) = psi(a) 1 for every basis a.
    {
        LinearSystem sys(n);
        for (uint64_t a = 0; a < n; ++a) {
            // Row per output coordinate r: sum_p Delta[a]_{p,r} psi_p - psi_a unit_r = 0.
            std::vector<FinVec> rows(n, FinVec(n));
            for (const auto& e : h.comult[a].entries()) {
                auto [p, r] = untensor_index(e.first, n);
                rows[r].add_to(p, e.second);
            }
            for (const auto& u : h.unit.entries()) rows[u.first].add_to(a, -u.second);
            for (uint64_t r = 0; r < n; ++r)
                if (!rows[r].is_zero()) sys.add_equation(rows[r], Scalar::zero());
        }
        AffineSolution sol = sys.solve();
        if (sol.nullspace.empty()) throw NoIntegralError("right-invariance nullspace is 0");
        if (sol.nullspace.size() > 1)
            throw NonUniqueIntegralError("dimension " + std::to_string(sol.nullspace.size()));
        md.psi = normalize_ray(sol.nullspace[0]);
    }

    md.phi = functional_compose(md.psi, h.antipode);

    // Modular element delta: (phi (x) id) Delta(a) = phi(a) delta, and its
    // inverse from (id (x) psi) Delta(a) = psi(a) delta^{-1}. Candidates come
    // from one basis element and are verified against all of them.
    auto solve_modular_elt = [&](const FinVec& f, bool left_leg) -> FinVec {
        FinVec cand(n);
        bool have = false;
        for (uint64_t a = 0; a < n; ++a) {
            FinVec img(n);
            for (const auto& e : h.comult[a].entries()) {
                auto [p, q] = untensor_index(e.first, n);
                if (left_leg)
                    img.add_to(q, e.second * f.get(p));  // apply f to leg 1
                else
                    img.add_to(p, e.second * f.get(q));  // apply f to leg 2
            }
            Scalar fa = f.get(a);
            if (fa.is_zero()) {
                if (!img.is_zero())
                    throw InvalidInput("integral invariance fails at basis " + h.label(a));
                continue;
            }
            FinVec c = img.scaled(fa.inverse());
            if (!have) {
                cand = c;
                have = true;
            } else if (cand != c) {
                throw InvalidInput("modular element inconsistent at basis " + h.label(a));
            }
        }
        if (!have) throw InvalidInput("integral vanishes identically");
        return cand;
    };
    md.delta = solve_modular_elt(md.phi, true);
    md.delta_inv = solve_modular_elt(md.psi, false);
    if (h.mul(md.delta, md.delta_inv) != h.unit || h.mul(md.delta_inv, md.delta) != h.unit)
        throw InvalidInput("modular element not invertible");

    // Modular automorphisms, columnwise from the nondegenerate forms.
    {
        LinMap p_phi = pairing_matrix(h, md.phi, true);
        Factored fac(p_phi);
        std::vector<FinVec> cols(n);
        for (uint64_t i = 0; i < n; ++i) {
            FinVec rhs(n);
            for (uint64_t j = 0; j < n; ++j)
                rhs.set(j, apply_functional(md.phi, h.mult[i * n + j]));
            cols[i] = fac.solve(rhs);
        }
        md.sigma = LinMap::from_columns(n, std::move(cols));
    }
    {
        LinMap p_psi = pairing_matrix(h, md.psi, true);
        Factored fac(p_psi);
        std::vector<FinVec> cols(n);
        for (uint64_t i = 0; i < n; ++i) {
            FinVec rhs(n);
            for (uint64_t j = 0; j < n; ++j)
                rhs.set(j, apply_functional(md.psi, h.mult[i * n + j]));
            cols[i] = fac.solve(rhs);
        }
        md.sigma_prime = LinMap::from_columns(n, std::move(cols));
    }

    // Scaling constant: psi(S^2 x) = tau psi(x).
    {
        FinVec psi_s2 = functional_compose(md.psi, h.antipode.compose(h.antipode));
        bool have = false;
        Scalar tau = Scalar::zero();
        for (uint64_t a = 0; a < n; ++a) {
            Scalar pa = md.psi.get(a);
            Scalar qa = psi_s2.get(a);
            if (pa.is_zero()) {
                if (!qa.is_zero()) throw InvalidInput("psi o S^2 not proportional to psi");
                continue;
            }
            Scalar t = qa / pa;
            if (!have) {
                tau = t;
                have = true;
            } else if (tau != t) {
                throw InvalidInput("scaling constant not scalar");
            }
        }
        if (!have) throw InvalidInput("psi vanishes identically");
        md.tau = tau;
    }

    auto [hh, kk] = find_cointegrals(h);
    md.coint_left = hh;
    md.coint_right = kk;
    return md;
}

std::pair<FinVec, FinVec> find_cointegrals(const HopfData& h) {
    const uint64_t n = h.dim;
    auto solve_side = [&](bool left) -> FinVec {
        LinearSystem sys(n);
        for (uint64_t b = 0; b < n; ++b) {
            // left: e_b * x - eps(b) x = 0; right: x * e_b - eps(b) x = 0.
            std::vector<FinVec> rows(n, FinVec(n));
            for (uint64_t j = 0; j < n; ++j) {
                const FinVec& prod = left ? h.mult[b * n + j] : h.mult[j * n + b];
                for (const auto& e : prod.entries()) rows[e.first].add_to(j, e.second);
                rows[j].add_to(j, -h.counit[b]);
            }
            for (uint64_t r = 0; r < n; ++r)
                if (!rows[r].is_zero()) sys.add_equation(rows[r], Scalar::zero());
        }
        AffineSolution sol = sys.solve();
        if (sol.nullspace.size() != 1)
            throw InvalidInput("cointegral space has dimension " +
                               std::to_string(sol.nullspace.size()));
        return normalize_ray(sol.nullspace[0]);
    };
    return {solve_side(true), solve_side(false)};
}

LinMap pairing_matrix(const HopfData& h, const FinVec& f, bool require_nondegenerate) {
    const uint64_t n = h.dim;
    LinMap p(n, n);
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j) {
            Scalar v = apply_functional(f, h.mult[i * n + j]);
            if (!v.is_zero()) p.set(i, j, v);
        }
    if (require_nondegenerate) {
        try {
            invert(p);
        } catch (const SingularMap&) {
            throw DegenerateForm("bilinear form (a,b) -> f(ab) is singular");
        }
    }
    return p;
}

Report verify_modular(const HopfData& h, const ModularData& md, const VerifyOptions& opt) {
    Report rep;
    const uint64_t n = h.dim;

    {
        bool ok = true;
        std::string w;
        for (uint64_t a = 0; ok && a < n; ++a) {
            FinVec lhs(n);
            for (const auto& e : h.comult[a].entries()) {
                auto [p, q] = untensor_index(e.first, n);
                lhs.add_to(q, e.second * md.psi.get(p));
            }
            if (lhs != h.unit.scaled(md.psi.get(a))) {
                ok = false;
                w = h.label(a);
            }
        }
        rep.record("psi_right_invariant", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (uint64_t a = 0; ok && a < n; ++a) {
            FinVec lhs(n);
            for (const auto& e : h.comult[a].entries()) {
                auto [p, q] = untensor_index(e.first, n);
                lhs.add_to(p, e.second * md.phi.get(q));
            }
            if (lhs != h.unit.scaled(md.phi.get(a))) {
                ok = false;
                w = h.label(a);
            }
        }
        rep.record("phi_left_invariant", ok, w);
    }
    rep.record("phi_is_psi_of_S", md.phi == functional_compose(md.psi, h.antipode), "");

    {
        // (id (x) psi) Delta(a) = psi(a) delta^{-1};  (phi (x) id) Delta(a) = phi(a) delta
        bool ok = true;
        std::string w;
        for (uint64_t a = 0; ok && a < n; ++a) {
            FinVec l1(n), l2(n);
            for (const auto& e : h.comult[a].entries()) {
                auto [p, q] = untensor_index(e.first, n);
                l1.add_to(p, e.second * md.psi.get(q));
                l2.add_to(q, e.second * md.phi.get(p));
            }
            if (l1 != md.delta_inv.scaled(md.psi.get(a)) ||
                l2 != md.delta.scaled(md.phi.get(a))) {
                ok = false;
                w = h.label(a);
            }
        }
        rep.record("modular_element_identities", ok, w);
    }
    rep.record("delta_grouplike",
               h.is_grouplike(md.delta) && h.S(md.delta) == md.delta_inv &&
                   h.mul(md.delta, md.delta_inv) == h.unit,
               "delta");
    {
        bool ok = true;
        std::string w;
        std::string mode = for_pairs(n, 8, opt, [&](uint64_t i, uint64_t j) {
            Scalar lhs = h.mult[i * n + j].pair(md.phi);
            Scalar rhs = h.mul(h.e(j), md.sigma.col(i)).pair(md.phi);
            if (lhs != rhs) {
                ok = false;
                w = h.label(i) + ", " + h.label(j);
                return false;
            }
            return true;
        });
        rep.record("sigma_identity", ok, w, mode);
    }
    {
        bool ok = true;
        std::string w;
        std::string mode = for_pairs(n, 8, opt, [&](uint64_t i, uint64_t j) {
            Scalar lhs = h.mult[i * n + j].pair(md.psi);
            Scalar rhs = h.mul(h.e(j), md.sigma_prime.col(i)).pair(md.psi);
            if (lhs != rhs) {
                ok = false;
                w = h.label(i) + ", " + h.label(j);
                return false;
            }
            return true;
        });
        rep.record("sigma_prime_identity", ok, w, mode);
    }
    {
        // sigma and sigma' are algebra automorphisms.
        bool ok = md.sigma.apply(h.unit) == h.unit && md.sigma_prime.apply(h.unit) == h.unit;
        std::string w = ok ? "" : "unit";
        std::string mode = "exhaustive";
        if (ok)
            mode = for_pairs(n, 10, opt, [&](uint64_t i, uint64_t j) {
                if (md.sigma.apply(h.mult[i * n + j]) !=
                        h.mul(md.sigma.col(i), md.sigma.col(j)) ||
                    md.sigma_prime.apply(h.mult[i * n + j]) !=
                        h.mul(md.sigma_prime.col(i), md.sigma_prime.col(j))) {
                    ok = false;
                    w = h.label(i) + ", " + h.label(j);
                    return false;
                }
                return true;
            });
        rep.record("sigma_multiplicative", ok, w, mode);
    }
    rep.record("tau_scaling",
               functional_compose(md.psi, h.antipode.compose(h.antipode)) ==
                   md.psi.scaled(md.tau),
               "psi o S^2 != tau psi");
    rep.record("sigma_prime_of_delta",
               md.sigma_prime.apply(md.delta) == md.delta.scaled(md.tau.inverse()),
               "sigma'(delta) != tau^{-1} delta");
    {
        // b h = eps(b) h and k b = eps(b) k; S(h) proportional to k.
        bool ok = true;
        std::string w;
        for (uint64_t b = 0; ok && b < n; ++b) {
            if (h.mul(h.e(b), md.coint_left) != md.coint_left.scaled(h.counit[b]) ||
                h.mul(md.coint_right, h.e(b)) != md.coint_right.scaled(h.counit[b])) {
                ok = false;
                w = h.label(b);
            }
        }
        rep.record("cointegral_identities", ok, w);
        FinVec sh = h.S(md.coint_left);
        auto [idx, c] = sh.leading();
        (void)idx;
        rep.record("S_of_left_cointegral", sh.scaled(c.inverse()) == md.coint_right,
                   "S(h) not proportional to k");
    }
    if (h.star) {
        // conj o psi o star is proportional to psi.
        FinVec tw(n);
        for (uint64_t i = 0; i < n; ++i) tw.set(i, h.star_of(h.e(i)).pair(md.psi).conj());
        bool ok = true;
        if (tw.is_zero()) {
            ok = false;
        } else {
            auto [idx, c] = tw.leading();
            Scalar base = md.psi.get(idx);
            ok = !base.is_zero() && tw.scaled(base / c) == md.psi;
        }
        rep.record("psi_star_proportional", ok, "conj o psi o star not proportional to psi");
    }
    return rep;
}

Report check_positivity(const HopfData& h, const FinVec& psi) {
    Report rep;
    if (!h.star) {
        rep.fail("positivity", "star structure missing");
        return rep;
    }
    const uint64_t n = h.dim;
    // Exact Hermitian symmetry first, then the numeric eigenvalue bound.
    bool hermitian = true;
    std::string w;
    std::vector<Scalar> gram(n * n, Scalar::zero());
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j)
            gram[i * n + j] = h.mul(h.star_of(h.e(i)), h.e(j)).pair(psi);
    for (uint64_t i = 0; hermitian && i < n; ++i)
        for (uint64_t j = 0; hermitian && j < n; ++j)
            if (gram[i * n + j] != gram[j * n + i].conj()) {
                hermitian = false;
                w = h.label(i) + ", " + h.label(j);
            }
    rep.record("gram_hermitian", hermitian, w);
    if (!hermitian) return rep;

    Eigen::MatrixXcd g(n, n);
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j) g(static_cast<long>(i), static_cast<long>(j)) =
            gram[i * n + j].embed();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
    double min_eig = es.eigenvalues().minCoeff();
    rep.record("gram_psd", min_eig >= -1e-9,
               "min eigenvalue " + std::to_string(min_eig),
               "numeric(tol=1e-9)");
    return rep;
}

}  // namespace aqg
