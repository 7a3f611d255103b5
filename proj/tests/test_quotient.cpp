#include <doctest.h>

#include <algorithm>
#include <set>

#include "mdc/errors.hpp"
#include "mdc/quotient.hpp"
#include "test_oracles.hpp"
#include "test_support.hpp"

using namespace mdc;
using namespace testsupport;

namespace {

// Small nonsingular matrices with |det| <= cap, for randomized property runs.
IntMatrix random_group_matrix(Rng& rng, std::size_t n, long cap) {
    while (true) {
        IntMatrix m = random_nonsingular(rng, n, -4, 4);
        Int d = det(m);
        if (cmp_abs(d, Int(cap)) <= 0) return m;
    }
}

}  // namespace

TEST_CASE("canonical representatives tile the Hermite box") {
    QuotientGroup g(IntMatrix{{2, 1}, {0, 3}});
    CHECK(g.order() == 6);
    CHECK(g.canonicalize({2, 0}) == Vec{0, 0});
    CHECK(g.canonicalize({0, 0}) == Vec{0, 0});

    const std::vector<Vec> elems = g.elements();
    REQUIRE(elems.size() == 6);
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    for (const Vec& e : elems) {
        CHECK(g.is_canonical(e));
        CHECK(g.canonicalize(e) == e);
    }

    // The box representatives hit every congruence class exactly once.
    const std::vector<Vec> reps = oracle::coset_representatives(g.matrix());
    REQUIRE(reps.size() == 6);
    std::set<Vec> canon;
    for (const Vec& r : reps) canon.insert(g.canonicalize(r));
    CHECK(canon == std::set<Vec>(elems.begin(), elems.end()));
}

TEST_CASE("canonicalization agrees with congruence modulo the column lattice") {
    Rng rng(2026);
    for (int iter = 0; iter < 80; ++iter) {
        const std::size_t n = 2 + iter % 2;
        const IntMatrix m = random_group_matrix(rng, n, 30);
        QuotientGroup g(m);
        Vec a = random_vector(rng, n, 9), b = random_vector(rng, n, 9);
        CHECK(g.congruent(a, b) == oracle::congruent_mod_lattice(m, a, b));
        CHECK(g.congruent(a, g.canonicalize(a)));

        // Shifting by a lattice vector never changes the representative.
        Vec x = random_vector(rng, n, 5);
        CHECK(g.canonicalize(vec_add(a, mat_vec(m, x))) == g.canonicalize(a));

        // Arithmetic wrappers respect congruence.
        CHECK(oracle::congruent_mod_lattice(m, g.add(a, b), vec_add(a, b)));
        CHECK(oracle::congruent_mod_lattice(m, g.neg(a), vec_neg(a)));
        CHECK(g.add(a, g.sub(b, a)) == g.canonicalize(b));
    }
}

TEST_CASE("element order matches repeated addition") {
    QuotientGroup g(IntMatrix{{2, 0}, {0, 6}});
    CHECK(g.element_order({1, 1}) == 6);
    CHECK(g.element_order({0, 0}) == 1);
    CHECK(g.element_order({1, 3}) == 2);

    Rng rng(77);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t n = 2 + iter % 2;
        const IntMatrix m = random_group_matrix(rng, n, 40);
        QuotientGroup q(m);
        for (const Vec& e : q.elements()) {
            const Int o = q.element_order(e);
            CHECK(o == oracle::element_order_by_addition(m, e));
            if (n == 2) CHECK(o == element_order_2x2(q, e));
        }
    }
}

TEST_CASE("invariant-factor coordinates give an isomorphism") {
    QuotientGroup g(IntMatrix::diagonal({2, 2, 3}));
    CHECK(g.rank() == 2);
    CHECK(g.cyclic_factors() == Vec{2, 6});
    CHECK(g.order() == 12);

    Rng rng(501);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = 2 + iter % 3;
        QuotientGroup q(random_group_matrix(rng, n, 36));
        const Vec& sp = q.cyclic_factors();
        std::set<Vec> images;
        for (const Vec& e : q.elements()) {
            const Vec c = q.to_snf_coords(e);
            REQUIRE(c.size() == q.rank());
            for (std::size_t i = 0; i < c.size(); ++i) {
                CHECK(c[i] >= 0);
                CHECK(c[i] < sp[i]);
            }
            images.insert(c);
            CHECK(q.from_snf_coords(c) == e);
        }
        CHECK(images.size() == q.elements().size());

        // The map is additive.
        Vec a = random_vector(rng, n, 9), b = random_vector(rng, n, 9);
        Vec lhs = q.to_snf_coords(vec_add(a, b));
        Vec rhs = vec_add(q.to_snf_coords(a), q.to_snf_coords(b));
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = floor_mod(rhs[i], sp[i]);
        CHECK(lhs == rhs);

        // Coordinates preserve element order.
        Int o = 1;
        const Vec ca = q.to_snf_coords(a);
        for (std::size_t i = 0; i < ca.size(); ++i) {
            const Int oi = sp[i] / gcd(sp[i], ca[i]);
            o = o / gcd(o, oi) * oi;
        }
        CHECK(o == q.element_order(a));
    }
}

TEST_CASE("projection onto cyclic coordinates via an explicit left transform") {
    // For diag(2,2,3) the left transform below is unimodular and its last two
    // rows project onto Z_2 x Z_6 coordinates; the projection sends these
    // three generators to (0,3), (1,0), (0,4).
    const IntMatrix u{{-1, 0, 1}, {0, 1, 0}, {-3, 0, 2}};
    REQUIRE(det(u) == 1);
    const Vec sp{2, 6};
    auto project = [&](const Vec& a) {
        Vec c(2);
        for (std::size_t i = 0; i < 2; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < 3; ++j) s += u(i + 1, j) * a[j];
            c[i] = floor_mod(s, sp[i]);
        }
        return c;
    };
    CHECK(project({1, 0, 0}) == Vec{0, 3});
    CHECK(project({0, 1, 0}) == Vec{1, 0});
    CHECK(project({0, 0, 2}) == Vec{0, 4});

    // The three images generate Z_2 x Z_6, so the originals generate the group.
    QuotientGroup g(IntMatrix::diagonal({2, 2, 3}));
    CHECK(g.generates({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
}

TEST_CASE("subgroup index counts cosets of the generated subgroup") {
    QuotientGroup g(IntMatrix::diagonal({2, 2, 3}));
    CHECK(g.subgroup_index({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}) == 1);
    CHECK(g.subgroup_index({{1, 0, 0}}) == 6);
    CHECK(g.subgroup_index({}) == 12);

    QuotientGroup h(IntMatrix::diagonal({2, 6}));
    CHECK(h.subgroup_index({{0, 1}}) == 2);
    CHECK_FALSE(h.generates({{0, 1}}));
    CHECK(h.generates({{0, 1}, {1, 0}}));

    Rng rng(90210);
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = 2 + iter % 2;
        const IntMatrix m = random_group_matrix(rng, n, 30);
        QuotientGroup q(m);
        std::vector<Vec> gens;
        for (std::size_t k = 0; k < 1 + static_cast<std::size_t>(iter % 3); ++k)
            gens.push_back(random_vector(rng, n, 6));
        const Int idx = q.subgroup_index(gens);
        CHECK(idx * Int(oracle::subgroup_size_by_closure(m, gens)) == q.order());

        // Generating the group is the same as every unit vector being reachable.
        bool all_units = true;
        for (std::size_t j = 0; j < n; ++j) {
            Vec e(n, Int(0));
            e[j] = 1;
            if (!q.solve_membership(gens, e)) all_units = false;
        }
        CHECK(q.generates(gens) == all_units);
    }
}

TEST_CASE("membership solving returns explicit coefficients") {
    QuotientGroup g(IntMatrix::diagonal({2, 6}));
    CHECK_FALSE(g.solve_membership({{0, 1}}, {1, 0}).has_value());
    auto sol = g.solve_membership({{0, 1}}, {0, 4});
    REQUIRE(sol.has_value());
    CHECK(g.congruent(vec_scale((*sol)[0], {0, 1}), {0, 4}));

    Rng rng(424242);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t n = 2 + iter % 2;
        const IntMatrix m = random_group_matrix(rng, n, 30);
        QuotientGroup q(m);
        std::vector<Vec> gens;
        for (std::size_t k = 0; k < 2; ++k) gens.push_back(random_vector(rng, n, 6));

        // A random combination must be recognized and reproduced.
        Vec target = q.zero();
        for (const Vec& gen : gens) target = q.add(target, q.mul(random_int(rng, 5), gen));
        auto x = q.solve_membership(gens, target);
        REQUIRE(x.has_value());
        Vec got(n, Int(0));
        for (std::size_t k = 0; k < gens.size(); ++k)
            got = vec_add(got, vec_scale((*x)[k], gens[k]));
        CHECK(q.congruent(got, target));

        // Arbitrary targets: solvability must match coset membership.
        Vec probe = random_vector(rng, n, 9);
        auto y = q.solve_membership(gens, probe);
        std::vector<Vec> closure_gens = gens;
        closure_gens.push_back(probe);
        const bool reachable =
            oracle::subgroup_size_by_closure(m, gens) == oracle::subgroup_size_by_closure(m, closure_gens);
        CHECK(y.has_value() == reachable);
    }
}

TEST_CASE("presentation of generators is a relation matrix") {
    QuotientGroup g(IntMatrix::diagonal({2, 6}));
    CHECK(g.presentation_from_generators({{1, 0}, {0, 1}}) == IntMatrix{{2, 0}, {0, 6}});
    CHECK(g.presentation_from_generators({{1, 3}}) == IntMatrix{{2}});
    CHECK(g.presentation_from_generators({{0, 0}, {1, 0}}) == IntMatrix{{1, 0}, {0, 2}});
    CHECK(g.presentation_from_generators({}) == IntMatrix(0, 0));

    Rng rng(1618);
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = 2 + iter % 2;
        const IntMatrix m = random_group_matrix(rng, n, 30);
        QuotientGroup q(m);

        // On the unit vectors the relation lattice is the column lattice of
        // the matrix itself, so the presentation is its Hermite form.
        std::vector<Vec> units;
        for (std::size_t j = 0; j < n; ++j) {
            Vec e(n, Int(0));
            e[j] = 1;
            units.push_back(e);
        }
        CHECK(q.presentation_from_generators(units) == q.hermite().H);

        std::vector<Vec> gens;
        for (std::size_t k = 0; k < 1 + static_cast<std::size_t>(iter % 3); ++k)
            gens.push_back(random_vector(rng, n, 6));
        const IntMatrix t = q.presentation_from_generators(gens);

        Int vol = 1;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            // Upper triangular with canonical residues above each pivot.
            vol *= t(j, j);
            CHECK(t(j, j) >= 1);
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (i > j) CHECK(t(i, j) == 0);
                if (i < j) {
                    CHECK(t(i, j) >= 0);
                    CHECK(t(i, j) < t(i, i));
                }
            }
            // Each column is a genuine relation among the generators.
            Vec s(n, Int(0));
            for (std::size_t i = 0; i <= j; ++i) s = vec_add(s, vec_scale(t(i, j), gens[i]));
            CHECK(q.congruent(s, q.zero()));
        }
        // Its volume is the order of the generated subgroup.
        CHECK(vol == Int(oracle::subgroup_size_by_closure(m, gens)));
    }
}

TEST_CASE("trivial and reflected groups") {
    QuotientGroup t(IntMatrix{{1, 0}, {7, 1}});
    CHECK(t.order() == 1);
    CHECK(t.rank() == 0);
    CHECK(t.elements() == std::vector<Vec>{{0, 0}});
    CHECK(t.canonicalize({5, -9}) == Vec{0, 0});
    CHECK(t.to_snf_coords({3, 4}) == Vec{});
    CHECK(t.from_snf_coords({}) == Vec{0, 0});
    CHECK(t.generates({}));

    // A negative determinant changes nothing about the group.
    QuotientGroup g(IntMatrix{{-2, 0}, {0, 3}});
    CHECK(g.order() == 6);
    CHECK(g.element_order({1, 1}) == 6);

    CHECK_THROWS_AS(QuotientGroup(IntMatrix{{2, 4}, {1, 2}}), SingularMatrix);
    CHECK_THROWS_AS(t.canonicalize({1, 2, 3}), DimensionMismatch);
}

TEST_CASE("automorphisms of the invariant-factor group") {
    // |Aut(Z_2 x Z_6)| = 12, |Aut(Z_4)| = 2, |Aut(Z_2 x Z_2)| = 6.
    struct Case {
        IntMatrix m;
        std::size_t count;
    };
    const Case cases[] = {
        {IntMatrix::diagonal({2, 6}), 12},
        {IntMatrix{{4}}, 2},
        {IntMatrix::diagonal({2, 2}), 6},
        {IntMatrix::diagonal({1, 5}), 4},
    };
    for (const Case& c : cases) {
        QuotientGroup g(c.m);
        const auto auts = group_automorphisms(g);
        CHECK(auts.size() == c.count);

        const Vec& sp = g.cyclic_factors();
        std::vector<Vec> all;
        for (const Vec& e : g.elements()) all.push_back(g.to_snf_coords(e));
        bool identity_seen = false;
        for (const auto& f : auts) {
            std::set<Vec> image;
            bool is_identity = true;
            for (const Vec& x : all) {
                const Vec fx = apply_automorphism(g, f, x);
                image.insert(fx);
                if (fx != x) is_identity = false;
                // Additive and order-preserving.
                for (const Vec& y : all) {
                    Vec lhs = apply_automorphism(g, f, g.to_snf_coords(
                                                           g.add(g.from_snf_coords(x), g.from_snf_coords(y))));
                    Vec rhs(sp.size());
                    const Vec fy = apply_automorphism(g, f, y);
                    for (std::size_t i = 0; i < sp.size(); ++i) rhs[i] = floor_mod(fx[i] + fy[i], sp[i]);
                    CHECK(lhs == rhs);
                }
            }
            CHECK(image.size() == all.size());
            identity_seen = identity_seen || is_identity;
        }
        CHECK(identity_seen);
    }

    QuotientGroup trivial(IntMatrix{{1}});
    CHECK(group_automorphisms(trivial).size() == 1);
    QuotientGroup big(IntMatrix{{6000}});
    CHECK_THROWS_AS(group_automorphisms(big), TooLarge);
}
