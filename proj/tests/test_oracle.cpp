#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mdc/circulant.hpp"
#include "mdc/errors.hpp"
#include "mdc/oracle.hpp"
#include "test_support.hpp"

using namespace mdc;
using namespace testsupport;

namespace {

Graph directed_cycle(std::size_t n) {
    Graph g(n, true);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph undirected_cycle(std::size_t n) {
    Graph g(n, false);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph petersen() {
    Graph g(10, false);
    for (std::size_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

Graph relabel(const Graph& g, const std::vector<std::size_t>& perm) {
    Graph h(g.size(), g.directed());
    for (const auto& [u, v] : g.edge_list()) h.add_edge(perm[u], perm[v]);
    return h;
}

CirculantGraph build_instance(const IntMatrix& m, const std::vector<Vec>& jumps, bool symmetric) {
    QuotientGroup g(m);
    JumpSet a = make_jump_set(g, jumps, symmetric);
    return CirculantGraph(std::move(g), std::move(a));
}

}  // namespace

TEST_CASE("automorphism enumeration on cycles and products") {
    const auto c5 = graph_automorphisms(directed_cycle(5));
    CHECK(c5.complete);
    CHECK(c5.order() == 5);  // rotations only
    for (const auto& p : c5.permutations) CHECK(is_graph_automorphism(directed_cycle(5), p));

    const auto c4 = graph_automorphisms(undirected_cycle(4));
    CHECK(c4.complete);
    CHECK(c4.order() == 8);  // dihedral

    Graph path(3, false);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(graph_automorphisms(path).order() == 2);

    const auto capped = graph_automorphisms(undirected_cycle(4), 3);
    CHECK(capped.order() == 3);
    CHECK_FALSE(capped.complete);

    CHECK_THROWS_AS(graph_automorphisms(Graph(40, false)), TooLarge);

    // The product of two triangles carries all 9 translations.
    const CirculantGraph kk = cartesian_product(build_instance(IntMatrix{{3}}, {{1}}, true),
                                                build_instance(IntMatrix{{3}}, {{1}}, true));
    const auto sample = graph_automorphisms(kk.graph());
    CHECK(sample.complete);
    CHECK(sample.order() == 72);
    CHECK(sample.order() % 9 == 0);
    for (const Vec& t : kk.group().elements()) {
        std::vector<std::size_t> perm(kk.vertices().size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = kk.vertex_index(kk.group().add(kk.vertices()[i], t));
        CHECK(is_graph_automorphism(kk.graph(), perm));
    }
}

TEST_CASE("regular cyclic subgroup search is the circulant test") {
    CHECK(has_regular_cyclic_subgroup(directed_cycle(7)));
    CHECK(has_regular_cyclic_subgroup(undirected_cycle(6)));
    CHECK_FALSE(has_regular_cyclic_subgroup(petersen()));

    // Star: not regular, rejected before any search.
    Graph star(4, false);
    for (std::size_t i = 1; i < 4; ++i) star.add_edge(0, i);
    CHECK_FALSE(has_regular_cyclic_subgroup(star));

    // Two disjoint directed triangles admit a 6-cycle automorphism.
    Graph two(6, true);
    for (std::size_t i = 0; i < 6; ++i) two.add_edge(i, (i + 2) % 6);
    CHECK(has_regular_cyclic_subgroup(two));

    // The 4-vertex exceptional digraph is a circulant; the 8-vertex
    // commutative 2-step instance over diag(2,4) is not.
    const CirculantGraph exc = build_instance(IntMatrix::diagonal({2, 2}), {{1, 0}, {1, 1}}, false);
    CHECK(has_regular_cyclic_subgroup(exc.graph()));
    const CirculantGraph no = build_instance(IntMatrix::diagonal({2, 4}), {{1, 0}, {0, 1}}, false);
    CHECK_FALSE(has_regular_cyclic_subgroup(no.graph()));

    // Every 1-D instance carries its translation cycle.
    Rng rng(311);
    for (int iter = 0; iter < 20; ++iter) {
        const long m = 3 + static_cast<long>(rng() % 10);
        std::vector<Vec> jumps;
        for (std::size_t k = 0; k < 1 + rng() % 3; ++k) jumps.push_back({Int(1 + rng() % (m - 1))});
        const bool symmetric = rng() % 2 == 0;
        const CirculantGraph cg = build_instance(IntMatrix{{m}}, jumps, symmetric);
        CHECK(has_regular_cyclic_subgroup(cg.graph()));
    }
}

TEST_CASE("canonical forms decide isomorphism") {
    CHECK(graphs_isomorphic(undirected_cycle(6), undirected_cycle(6)));
    CHECK_FALSE(graphs_isomorphic(undirected_cycle(6), petersen()));

    // Equal degree sequences, different structure: C_6 vs two triangles.
    Graph twotri(6, false);
    for (std::size_t i = 0; i < 3; ++i) {
        twotri.add_edge(i, (i + 1) % 3);
        twotri.add_edge(3 + i, 3 + (i + 1) % 3);
    }
    CHECK_FALSE(graphs_isomorphic(undirected_cycle(6), twotri));

    // Arc reversal of a directed cycle is an isomorphism (negation).
    Graph rev(5, true);
    for (std::size_t i = 0; i < 5; ++i) rev.add_edge((i + 1) % 5, i);
    CHECK(graphs_isomorphic(directed_cycle(5), rev));

    // Invariance under arbitrary relabeling.
    Rng rng(555);
    for (int iter = 0; iter < 30; ++iter) {
        const std::size_t n = 4 + rng() % 7;
        Graph g(n, iter % 2 == 0);
        for (std::size_t e = 0; e < 2 * n; ++e) {
            std::size_t u = rng() % n, v = rng() % n;
            if (u != v) g.add_edge(u, v);
        }
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(graphs_isomorphic(g, relabel(g, perm)));
        CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
    }
}

TEST_CASE("brute-force dimension search") {
    CHECK(dimension_bruteforce(directed_cycle(6)) == 1);
    CHECK(dimension_bruteforce(undirected_cycle(4)) == 1);

    Graph k2(2, false);
    k2.add_edge(0, 1);
    CHECK(dimension_bruteforce(k2) == 1);
    CHECK(dimension_bruteforce(Graph(1, false)) == 0);

    // Product of two triangles: not a circulant, realized at rank 2.
    const CirculantGraph kk = cartesian_product(build_instance(IntMatrix{{3}}, {{1}}, true),
                                                build_instance(IntMatrix{{3}}, {{1}}, true));
    CHECK_FALSE(has_regular_cyclic_subgroup(kk.graph()));
    CHECK(dimension_bruteforce(kk.graph()) == 2);

    // The 3-cube: a rank-2 realization exists (it is not a circulant).
    const CirculantGraph q3 = cartesian_product(
        cartesian_product(build_instance(IntMatrix{{2}}, {{1}}, true),
                          build_instance(IntMatrix{{2}}, {{1}}, true)),
        build_instance(IntMatrix{{2}}, {{1}}, true));
    CHECK(dimension_bruteforce(q3.graph()) == 2);

    CHECK_THROWS_AS(dimension_bruteforce(petersen()), NotVertexTransitive);
    CHECK_THROWS_AS(dimension_bruteforce(Graph(20, false), 16), TooLarge);

    // A realization never beats the rank of a defining group.
    Rng rng(99);
    for (int iter = 0; iter < 10; ++iter) {
        const IntMatrix m = random_nonsingular(rng, 2, -3, 3);
        QuotientGroup g(m);
        if (g.order() > 12 || g.order() < 2) continue;
        std::vector<Vec> raw;
        for (std::size_t k = 0; k < 2; ++k) raw.push_back(random_vector(rng, 2, 4));
        std::vector<Vec> ok;
        for (const Vec& a : raw)
            if (!vec_is_zero(g.canonicalize(a))) ok.push_back(a);
        if (ok.empty()) continue;
        const CirculantGraph cg = build_instance(m, ok, true);
        CHECK(dimension_bruteforce(cg.graph()) <= std::max<std::size_t>(g.rank(), 1));
    }
}

TEST_CASE("element order by repeated addition") {
    QuotientGroup g(IntMatrix::diagonal({2, 6}));
    CHECK(element_order_bruteforce(g, {0, 0}) == 1);
    CHECK(element_order_bruteforce(g, {1, 1}) == 6);

    Rng rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        const IntMatrix m = random_nonsingular(rng, 2, -4, 4);
        QuotientGroup q(m);
        const Vec a = random_vector(rng, 2, 9);
        CHECK(element_order_bruteforce(q, a) == q.element_order(a));
    }
}
