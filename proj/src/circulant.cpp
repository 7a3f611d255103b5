#include "mdc/circulant.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "mdc/errors.hpp"

namespace mdc {

JumpSet make_jump_set(const QuotientGroup& g, const std::vector<Vec>& jumps, bool symmetric,
                      bool strict) {
    std::set<Vec> seen;
    for (const Vec& a : jumps) {
        if (a.size() != g.dim()) throw JumpNotInGroup("jump length does not match group dimension");
        Vec c = g.canonicalize(a);
        if (vec_is_zero(c)) throw IdentityJump("jump is the identity");
        seen.insert(std::move(c));
    }
    if (symmetric) {
        for (const Vec& c : std::vector<Vec>(seen.begin(), seen.end())) {
            Vec n = g.neg(c);
            if (seen.count(n)) continue;
            if (strict) throw NotSymmetric("jump set is not closed under negation");
            seen.insert(std::move(n));
        }
    }
    JumpSet out;
    out.jumps.assign(seen.begin(), seen.end());
    out.symmetric = symmetric;
    return out;
}

CirculantGraph::CirculantGraph(QuotientGroup group, JumpSet jumps)
    : group_(std::move(group)), jumps_(std::move(jumps)), vertices_(group_.elements()) {
    graph_ = Graph(vertices_.size(), directed());
    for (std::size_t u = 0; u < vertices_.size(); ++u)
        for (const Vec& a : jumps_.jumps) graph_.add_edge(u, vertex_index(group_.add(vertices_[u], a)));
}

std::size_t CirculantGraph::vertex_index(const Vec& canonical) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), canonical);
    if (it == vertices_.end() || *it != canonical)
        throw DimensionMismatch("vector is not a canonical vertex of this graph");
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::string> CirculantGraph::vertex_labels() const {
    std::vector<std::string> labels;
    labels.reserve(vertices_.size());
    for (const Vec& v : vertices_) labels.push_back(vec_to_string(v));
    return labels;
}

CirculantGraph cartesian_product(const CirculantGraph& a, const CirculantGraph& b) {
    if (a.directed() != b.directed())
        throw MixedDirectedness("cannot form the product of a digraph and a graph");
    const std::size_t na = a.group().dim(), nb = b.group().dim();
    QuotientGroup g(block_diag(a.group().matrix(), b.group().matrix()));
    std::vector<Vec> jumps;
    for (const Vec& x : a.jump_set().jumps) {
        Vec j(na + nb, Int(0));
        std::copy(x.begin(), x.end(), j.begin());
        jumps.push_back(std::move(j));
    }
    for (const Vec& y : b.jump_set().jumps) {
        Vec j(na + nb, Int(0));
        std::copy(y.begin(), y.end(), j.begin() + static_cast<std::ptrdiff_t>(na));
        jumps.push_back(std::move(j));
    }
    JumpSet js = make_jump_set(g, jumps, a.jump_set().symmetric);
    return CirculantGraph(std::move(g), std::move(js));
}

CirculantComponents components(const CirculantGraph& cg) {
    CirculantComponents out;
    out.alpha = cg.group().subgroup_index(cg.jump_set().jumps);
    out.vertex_sets = cg.graph().components();
    if (out.alpha != Int(static_cast<unsigned long>(out.vertex_sets.size())))
        throw std::logic_error("subgroup index disagrees with component count");
    return out;
}

ReducedPresentation reduce_disconnected(const QuotientGroup& g, const JumpSet& a) {
    ReducedPresentation out;
    out.alpha = g.subgroup_index(a.jumps);
    if (out.alpha == 1) throw AlreadyConnected("instance is already connected");
    const std::size_t d = a.jumps.size();
    if (d == 0) {
        // No jumps: every component is a single vertex, presented over Z_1.
        out.matrix = IntMatrix{{1}};
        out.matrix(0, 0) = out.alpha;
        return out;
    }
    out.matrix = g.presentation_from_generators(a.jumps);
    for (std::size_t j = 0; j < d; ++j) {
        out.matrix(0, j) *= out.alpha;
        Vec e(d, Int(0));
        e[j] = 1;
        e[0] *= out.alpha;
        out.jumps.push_back(std::move(e));
    }
    return out;
}

AdamCanonicalForm adam_canonical(const QuotientGroup& g, const JumpSet& a) {
    AdamCanonicalForm out;
    out.symmetric = a.symmetric;
    if (g.rank() == 0) {
        out.sprime = IntMatrix{{1}};
        return out;
    }
    out.sprime = IntMatrix(g.rank(), g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) out.sprime(i, i) = g.cyclic_factors()[i];
    for (const Vec& x : a.jumps) out.jumps.push_back(g.to_snf_coords(x));
    std::sort(out.jumps.begin(), out.jumps.end());
    return out;
}

CirculantGraph build_canonical(const AdamCanonicalForm& form) {
    QuotientGroup g(form.sprime);
    JumpSet js = make_jump_set(g, form.jumps, form.symmetric);
    return CirculantGraph(std::move(g), std::move(js));
}

bool adam_isomorphic(const QuotientGroup& g1, const JumpSet& a1, const QuotientGroup& g2,
                     const JumpSet& a2, const Int& max_order) {
    if (g1.cyclic_factors() != g2.cyclic_factors()) return false;
    if (a1.jumps.size() != a2.jumps.size()) return false;
    std::set<Vec> from, to;
    for (const Vec& x : a1.jumps) from.insert(g1.to_snf_coords(x));
    for (const Vec& x : a2.jumps) to.insert(g2.to_snf_coords(x));
    for (const GroupAutomorphism& f : group_automorphisms(g1, max_order)) {
        std::set<Vec> image;
        for (const Vec& c : from) image.insert(apply_automorphism(g1, f, c));
        if (image == to) return true;
    }
    return false;
}

}  // namespace mdc
