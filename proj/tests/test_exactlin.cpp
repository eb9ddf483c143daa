#include "doctest.h"

#include "aqg/rng.hpp"
#include "aqg/solve.hpp"

using namespace aqg;

TEST_CASE("scalar field laws on random elements") {
    Rng rng(42);
    for (uint32_t field : {1u, 3u, 4u, 8u, 12u}) {
        for (int rep = 0; rep < 40; ++rep) {
            Scalar a = rng.small_scalar(field);
            Scalar b = rng.small_scalar(field);
            Scalar c = rng.small_scalar(field);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one());
                CHECK(Scalar::one() / a == a.inverse());
            }
        }
    }
}

TEST_CASE("cyclotomic basics") {
    // zeta_4 = i: i^2 = -1, conj(i) = -i = i^3.
    Scalar i4 = Scalar::zeta(4);
    CHECK(i4 * i4 == Scalar(-1));
    CHECK(i4.conj() == Scalar::zeta_pow(4, 3));
    CHECK(i4 * i4.conj() == Scalar::one());
    // zeta_3 satisfies 1 + z + z^2 = 0.
    Scalar z3 = Scalar::zeta(3);
    CHECK(Scalar::one() + z3 + z3 * z3 == Scalar::zero_of(3));
    // zeta_6 is a primitive 6th root: cube is -1.
    CHECK(Scalar::zeta(6) * Scalar::zeta(6) * Scalar::zeta(6) == Scalar(-1));
    // Degrees: phi(8) = 4, phi(12) = 4, phi(16) = 8.
    CHECK(Scalar::phi_degree(8) == 4);
    CHECK(Scalar::phi_degree(12) == 4);
    CHECK(Scalar::phi_degree(16) == 8);
    // Rationals promote into any Q(zeta_n); distinct orders must not mix.
    CHECK(Scalar(2) * z3 == z3 + z3);
    CHECK_THROWS_AS(z3 * i4, FieldMismatch);
}

TEST_CASE("solve_linear identity and degenerate cases") {
    LinMap id = LinMap::identity(3);
    FinVec v(3);
    v.set(0, Scalar(2));
    v.set(2, Scalar::of_fraction(1, 3));
    AffineSolution s = solve_linear(id, v);
    CHECK(s.consistent);
    CHECK(s.nullspace.empty());
    CHECK(s.particular == v);

    LinMap zero(3, 3);
    AffineSolution z = solve_linear(zero, FinVec(3));
    CHECK(z.consistent);
    CHECK(z.nullspace.size() == 3);

    // Inconsistent: zero map with nonzero rhs -> empty set, signalled distinctly.
    AffineSolution bad = solve_linear(zero, v);
    CHECK(!bad.consistent);
}

TEST_CASE("2x2 system over Q(zeta_4) built from its solution") {
    // Fix the solution x = (zeta_4, 1), choose an invertible M, solve M x = b.
    Scalar i = Scalar::zeta(4);
    LinMap m(2, 2);
    m.set(0, 0, Scalar(1));
    m.set(0, 1, i);
    m.set(1, 0, Scalar(2));
    m.set(1, 1, Scalar(1) + i);
    FinVec x(2);
    x.set(0, i);
    x.set(1, Scalar::one());
    FinVec b = m.apply(x);
    AffineSolution s = solve_linear(m, b);
    REQUIRE(s.consistent);
    CHECK(s.nullspace.empty());
    CHECK(s.particular == x);
    CHECK(m.apply(s.particular) == b);  // verified by substitution
}

TEST_CASE("solve_linear(M, M v) always contains v") {
    Rng rng(7);
    for (int rep = 0; rep < 25; ++rep) {
        uint64_t n = 2 + rng.below(5);
        LinMap m(n, n);
        for (uint64_t j = 0; j < n; ++j)
            for (uint64_t i = 0; i < n; ++i)
                if (rng.below(2) == 0) m.set(i, j, rng.small_rational());
        FinVec v(n);
        for (uint64_t i = 0; i < n; ++i)
            if (rng.below(2) == 0) v.set(i, rng.small_rational());
        AffineSolution s = solve_linear(m, m.apply(v));
        REQUIRE(s.consistent);
        // v - particular must reduce to zero against the nullspace basis.
        FinVec diff = v - s.particular;
        RowReducer red(n, 0);
        for (const auto& nv : s.nullspace) red.add_row(nv);
        uint64_t base_rank = red.rank();
        red.add_row(diff);
        CHECK(red.rank() == base_rank);
    }
}

TEST_CASE("nullspace basics and rank-nullity") {
    CHECK(nullspace(LinMap::identity(4)).empty());
    CHECK(nullspace(LinMap(3, 3)).size() == 3);

    Rng rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        uint64_t rows = 2 + rng.below(4), cols = 2 + rng.below(4);
        LinMap m(rows, cols);
        for (uint64_t j = 0; j < cols; ++j)
            for (uint64_t i = 0; i < rows; ++i)
                if (rng.below(3) == 0) m.set(i, j, rng.small_rational());
        auto ns = nullspace(m);
        RowReducer red(rows, 0);
        for (uint64_t j = 0; j < cols; ++j) red.add_row(m.col(j));
        CHECK(red.rank() + ns.size() == cols);  // rank-nullity
        for (const auto& v : ns) CHECK(m.apply(v).is_zero());
    }
}

TEST_CASE("left-integral structure system of the 4-dim Sweedler algebra") {
    // Oracle system written from the structure constants directly. Basis
    // 1, g, x, gx with Delta(1)=1(x)1, Delta(g)=g(x)g,
    // Delta(x)=1(x)x + x(x)g, Delta(gx)=g(x)gx + gx(x)1.
    // Left invariance (id (x) phi) Delta(a) = phi(a) 1 gives, per basis a and
    // output coordinate r, rows over the unknowns (phi_1, phi_g, phi_x, phi_gx).
    LinearSystem sys(4);
    auto row = [&](std::initializer_list<std::pair<uint64_t, long>> cs) {
        FinVec r(4);
        for (auto [i, v] : cs) r.add_to(i, Scalar(v));
        sys.add_equation(r, Scalar::zero());
    };
    // a = g: phi(g) e_g = phi(g) e_1.
    row({{1, -1}});
    row({{1, 1}});
    // a = x: phi(x) e_1 + phi(g) e_x = phi(x) e_1 -> row at e_x: phi_g = 0.
    row({{1, 1}});
    // a = gx: phi(gx) e_g + phi(1) e_gx = phi(gx) e_1.
    row({{3, -1}});  // coordinate e_1
    row({{3, 1}});   // coordinate e_g
    row({{0, 1}});   // coordinate e_gx
    AffineSolution s = sys.solve();
    REQUIRE(s.consistent);
    CHECK(s.nullspace.size() == 1);  // 1-dimensional kernel
    // The ray is the functional phi = x^*.
    FinVec phi = s.nullspace[0];
    CHECK(!phi.get(2).is_zero());
    CHECK(phi.get(0).is_zero());
    CHECK(phi.get(1).is_zero());
    CHECK(phi.get(3).is_zero());
}

TEST_CASE("tensor index convention is row-major and bijective") {
    FinVec e0_2 = FinVec::basis(2, 0), e1_2 = FinVec::basis(2, 1);
    FinVec e0_3 = FinVec::basis(3, 0);
    CHECK(e0_2.tensor(e0_2).entries()[0].first == 0);
    CHECK(e1_2.tensor(e0_3).entries()[0].first == 3);  // (1,0) in dims 2x3

    // Bijection {0..d1-1} x {0..d2-1} -> {0..d1 d2 - 1}.
    uint64_t d1 = 5, d2 = 7;
    std::vector<bool> seen(d1 * d2, false);
    for (uint64_t i = 0; i < d1; ++i)
        for (uint64_t j = 0; j < d2; ++j) {
            uint64_t idx = i * d2 + j;
            CHECK(!seen[idx]);
            seen[idx] = true;
            auto [p, q] = untensor_index(idx, d2);
            CHECK(p == i);
            CHECK(q == j);
        }
}

TEST_CASE("(f (x) g)(v (x) w) = f(v) (x) g(w) on random sparse inputs") {
    Rng rng(2024);
    for (int rep = 0; rep < 20; ++rep) {
        uint64_t n1 = 2 + rng.below(3), n2 = 2 + rng.below(3);
        uint64_t m1 = 2 + rng.below(3), m2 = 2 + rng.below(3);
        LinMap f(m1, n1), g(m2, n2);
        for (uint64_t j = 0; j < n1; ++j)
            for (uint64_t i = 0; i < m1; ++i)
                if (rng.below(2) == 0) f.set(i, j, rng.small_rational());
        for (uint64_t j = 0; j < n2; ++j)
            for (uint64_t i = 0; i < m2; ++i)
                if (rng.below(2) == 0) g.set(i, j, rng.small_rational());
        FinVec v(n1), w(n2);
        for (uint64_t i = 0; i < n1; ++i)
            if (rng.below(2) == 0) v.set(i, rng.small_rational());
        for (uint64_t i = 0; i < n2; ++i)
            if (rng.below(2) == 0) w.set(i, rng.small_rational());
        CHECK(f.tensor(g).apply(v.tensor(w)) == f.apply(v).tensor(g.apply(w)));
    }
}

TEST_CASE("matrix inversion") {
    Rng rng(11);
    for (int rep = 0; rep < 15; ++rep) {
        uint64_t n = 2 + rng.below(4);
        LinMap m(n, n);
        // Unit lower-triangular: always invertible.
        for (uint64_t j = 0; j < n; ++j) {
            m.set(j, j, Scalar::one());
            for (uint64_t i = j + 1; i < n; ++i)
                if (rng.below(2) == 0) m.set(i, j, rng.small_rational());
        }
        LinMap inv = invert(m);
        CHECK(inv.compose(m) == LinMap::identity(n));
        CHECK(m.compose(inv) == LinMap::identity(n));
    }
    CHECK_THROWS_AS(invert(LinMap(2, 2)), SingularMap);
}

TEST_CASE("dimension mismatches are rejected") {
    LinMap m(2, 3);
    CHECK_THROWS_AS(solve_linear(m, FinVec(5)), DimensionMismatch);
    CHECK_THROWS_AS(m.apply(FinVec(2)), DimensionMismatch);
    CHECK_THROWS_AS(FinVec(2) + FinVec(3), DimensionMismatch);
}
