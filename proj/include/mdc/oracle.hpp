#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mdc/graph.hpp"
#include "mdc/quotient.hpp"

namespace mdc {

// Brute-force verification layer: everything here works on raw adjacency
// (or raw group arithmetic) and is deliberately kept free of the
// normal-form shortcuts it is used to check.  Hard size caps keep the
// searches as correctness anchors, not production paths.

struct PermutationGroupSample {
    std::size_t degree = 0;
    std::vector<std::vector<std::size_t>> permutations;
    bool complete = false;  // permutations is the entire automorphism group

    std::size_t order() const { return permutations.size(); }
};

bool is_graph_automorphism(const Graph& g, const std::vector<std::size_t>& perm);

// All automorphisms (or the first `cap`) by color-refinement-guided
// backtracking; every permutation is re-verified edge-by-edge on insert.
PermutationGroupSample graph_automorphisms(const Graph& g, std::size_t cap = static_cast<std::size_t>(-1),
                                           std::size_t vertex_limit = 32);

// True iff some automorphism is a single cycle through all vertices, i.e.
// the automorphism group has a regular cyclic subgroup: the circulant test.
// Decided by searching for a cyclic vertex labeling under which adjacency
// depends only on label difference.
bool has_regular_cyclic_subgroup(const Graph& g, std::size_t vertex_limit = 32);

// Canonical string: equal for two graphs iff they are isomorphic.
// Minimal adjacency encoding over color-compatible vertex orderings.
std::string canonical_form(const Graph& g, std::size_t vertex_limit = 32);

bool graphs_isomorphic(const Graph& a, const Graph& b, std::size_t vertex_limit = 32);

// Smallest k such that the graph is the Cayley (di)graph of some abelian
// group of rank k: enumerates invariant-factor chains of |V|, then jump
// sets up to group automorphism, and tests isomorphism.  Throws
// NotVertexTransitive when no realization exists at any rank.
std::size_t dimension_bruteforce(const Graph& g, std::size_t vertex_limit = 16);

// Order of a group element by repeated addition until the sum cancels.
Int element_order_bruteforce(const QuotientGroup& g, const Vec& a);

}  // namespace mdc
