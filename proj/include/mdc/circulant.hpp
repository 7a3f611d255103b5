#pragma once

#include "mdc/graph.hpp"
#include "mdc/quotient.hpp"

namespace mdc {

// Connection set of a circulant instance.  Jumps are kept canonical,
// nonzero, deduplicated and sorted; in symmetric (graph) mode the set is
// closed under negation.
struct JumpSet {
    std::vector<Vec> jumps;
    bool symmetric = false;
};

// Validates and normalizes raw jump vectors against the group.  In
// symmetric mode missing negations are added unless `strict`, which
// rejects sets that are not already closed.
JumpSet make_jump_set(const QuotientGroup& g, const std::vector<Vec>& jumps, bool symmetric,
                      bool strict = false);

// The Cayley (di)graph of Z^n/MZ^n on a jump set A: vertex u is adjacent
// to u + a for every a in A.  Vertices are the canonical group elements in
// lexicographic order; the graph is directed exactly when the jump set is
// not symmetric.
class CirculantGraph {
public:
    CirculantGraph(QuotientGroup group, JumpSet jumps);

    const QuotientGroup& group() const { return group_; }
    const JumpSet& jump_set() const { return jumps_; }
    bool directed() const { return !jumps_.symmetric; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    std::size_t vertex_index(const Vec& canonical) const;
    const Graph& graph() const { return graph_; }
    std::vector<std::string> vertex_labels() const;

private:
    QuotientGroup group_;
    JumpSet jumps_;
    std::vector<Vec> vertices_;
    Graph graph_;
};

// Cartesian product: vertices are pairs, adjacent when equal in one factor
// and adjacent in the other.  Realized over diag(M1, M2) with the jump
// sets embedded in their own blocks.
CirculantGraph cartesian_product(const CirculantGraph& a, const CirculantGraph& b);

// The graph splits into alpha copies of the Cayley (di)graph of <A>, where
// alpha is the subgroup index; the copies are the weak components.  Both
// counts are computed and must agree.
struct CirculantComponents {
    Int alpha;
    std::vector<std::vector<std::size_t>> vertex_sets;
};
CirculantComponents components(const CirculantGraph& cg);

// Presentation of a disconnected instance as a connected one of lower
// order: the component is the Cayley (di)graph of <A> on the jumps
// themselves, presented by their relation matrix; scaling its first row
// (and the first coordinate of each unit jump) by alpha yields an
// instance isomorphic to the input.
struct ReducedPresentation {
    Int alpha;
    IntMatrix matrix;
    std::vector<Vec> jumps;
};
ReducedPresentation reduce_disconnected(const QuotientGroup& g, const JumpSet& a);

// Canonical presentation over the invariant-factor group: matrix
// diag(s'_1..s'_r) with the jump images sorted.  The resulting instance is
// Adam-isomorphic to the input.  A trivial group is presented as [1].
struct AdamCanonicalForm {
    IntMatrix sprime;
    std::vector<Vec> jumps;
    bool symmetric = false;
};
AdamCanonicalForm adam_canonical(const QuotientGroup& g, const JumpSet& a);
CirculantGraph build_canonical(const AdamCanonicalForm& form);

// True iff some group isomorphism maps one jump set onto the other:
// invariant factors must match and some automorphism of the common
// invariant-factor group must carry the first image set to the second.
bool adam_isomorphic(const QuotientGroup& g1, const JumpSet& a1, const QuotientGroup& g2,
                     const JumpSet& a2, const Int& max_order = Int(5000));

}  // namespace mdc
