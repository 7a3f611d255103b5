#include "mdc/directions.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>

#include "mdc/errors.hpp"

namespace mdc {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

Edge support_edge(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

// The undirected support: both arc orientations collapse onto one edge.
Graph build_support(const Graph& g) {
    Graph h(g.size(), false);
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t w : g.neighbors(u)) {
            if (w == u) throw NotAProductInstance("loops cannot occur in a circulant product");
            if (!h.has_edge(u, w)) h.add_edge(u, w);
        }
    return h;
}

using EdgeFilter = std::function<bool(std::size_t, std::size_t)>;

// Breadth-first distances from s in the subgraph of edges passing `allowed`.
std::vector<std::size_t> filtered_distances(const Graph& h, std::size_t s, const EdgeFilter& allowed) {
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(h.size(), kInf);
    std::queue<std::size_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        for (std::size_t w : h.neighbors(u))
            if (dist[w] == kInf && allowed(u, w)) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

// Depth-first enumeration of simple cycles of exact length `len` through the
// vertex `root`, restricted to allowed edges, in ascending vertex order (so
// the first cycle emitted is the lexicographically smallest sequence).
// `emit` returns false to stop the search.
void cycles_through_vertex(const Graph& h, std::size_t root, std::size_t len, const EdgeFilter& allowed,
                           const std::function<bool(const std::vector<std::size_t>&)>& emit) {
    const std::vector<std::size_t> dist = filtered_distances(h, root, allowed);
    std::vector<std::size_t> path{root};
    std::vector<bool> on_path(h.size(), false);
    on_path[root] = true;
    auto rec = [&](auto&& self) -> bool {
        const std::size_t v = path.back();
        const std::size_t remaining = len - (path.size() - 1);
        if (remaining == 0) return true;  // handled by the caller guard
        for (std::size_t w : h.neighbors(v)) {
            if (!allowed(v, w)) continue;
            if (remaining == 1) {
                if (w == root && !emit(path)) return false;
                continue;
            }
            if (on_path[w] || dist[w] > remaining - 1) continue;
            path.push_back(w);
            on_path[w] = true;
            const bool keep_going = self(self);
            on_path[w] = false;
            path.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    rec(rec);
}

// Shortest odd cycle through `root` using allowed edges only, as the
// lexicographically smallest vertex sequence of that length; empty when no
// odd cycle of length <= max_len exists.
std::vector<std::size_t> shortest_odd_cycle(const Graph& h, std::size_t root, std::size_t max_len,
                                            const EdgeFilter& allowed) {
    for (std::size_t len = 3; len <= max_len; len += 2) {
        std::vector<std::size_t> found;
        cycles_through_vertex(h, root, len, allowed, [&](const std::vector<std::size_t>& cyc) {
            found = cyc;
            return false;
        });
        if (!found.empty()) return found;
    }
    return {};
}

class DirectionSearch {
public:
    DirectionSearch(const Graph& h, unsigned long p) : h_(h), p_(p) {}

    DirectionPartition run() {
        discover_at_root();
        propagate();
        return finalize();
    }

private:
    std::size_t direction_of(std::size_t a, std::size_t b) const {
        const auto it = dir_.find(support_edge(a, b));
        return it == dir_.end() ? kUnassigned : it->second;
    }

    void assign(std::size_t a, std::size_t b, std::size_t d) {
        const auto [it, inserted] = dir_.emplace(support_edge(a, b), d);
        if (!inserted && it->second != d)
            throw NotAProductInstance("edge direction is not uniquely determined");
    }

    // Grows the copy of one factor through the root: every shortest odd
    // cycle of the factor's girth through an already-claimed edge stays
    // inside the copy, and the copy is the subgraph spanned by its p
    // vertices once all of them are known.
    void grow_copy(const std::vector<std::size_t>& seed, std::size_t d) {
        const std::size_t len = seed.size();
        std::set<std::size_t> copy(seed.begin(), seed.end());
        for (std::size_t i = 0; i < seed.size(); ++i) assign(seed[i], seed[(i + 1) % seed.size()], d);
        const EdgeFilter in_dir = [&](std::size_t a, std::size_t b) {
            const std::size_t cur = direction_of(a, b);
            return cur == kUnassigned || cur == d;
        };
        bool changed = true;
        while (copy.size() < p_ && changed) {
            changed = false;
            const std::vector<Edge> claimed = edges_of_direction(d);
            for (const Edge& e : claimed) {
                cycles_through_vertex(h_, e.first, len, in_dir, [&](const std::vector<std::size_t>& cyc) {
                    bool uses_edge = false;
                    for (std::size_t i = 0; i < cyc.size() && !uses_edge; ++i)
                        uses_edge = support_edge(cyc[i], cyc[(i + 1) % cyc.size()]) == e;
                    if (!uses_edge) return true;
                    for (std::size_t i = 0; i < cyc.size(); ++i) {
                        assign(cyc[i], cyc[(i + 1) % cyc.size()], d);
                        changed |= copy.insert(cyc[i]).second;
                    }
                    return copy.size() < p_;
                });
                if (copy.size() >= p_) break;
            }
            span_copy(copy, d);
        }
        if (copy.size() != p_) throw NotAProductInstance("factor copy does not close on p vertices");
        span_copy(copy, d);
    }

    // Spanned-subgraph rule: edges between known copy vertices all belong to
    // the copy's direction.
    void span_copy(const std::set<std::size_t>& copy, std::size_t d) {
        for (std::size_t u : copy)
            for (std::size_t w : h_.neighbors(u))
                if (u < w && copy.count(w)) assign(u, w, d);
    }

    std::vector<Edge> edges_of_direction(std::size_t d) const {
        std::vector<Edge> out;
        for (const auto& [e, dd] : dir_)
            if (dd == d) out.push_back(e);
        return out;
    }

    void discover_at_root() {
        const EdgeFilter unassigned = [&](std::size_t a, std::size_t b) {
            return direction_of(a, b) == kUnassigned;
        };
        while (true) {
            bool open = false;
            for (std::size_t w : h_.neighbors(kRoot)) open |= direction_of(kRoot, w) == kUnassigned;
            if (!open) break;
            const std::vector<std::size_t> cyc = shortest_odd_cycle(h_, kRoot, p_, unassigned);
            if (cyc.empty())
                throw NotAProductInstance("no shortest odd cycle through the root remains");
            grow_copy(cyc, n_directions_++);
        }
        degree_.assign(n_directions_, 0);
        for (std::size_t w : h_.neighbors(kRoot)) ++degree_[direction_of(kRoot, w)];

        unsigned long order = 1;
        for (std::size_t i = 0; i < n_directions_; ++i) {
            if (order > h_.size() / p_) throw NotAProductInstance("vertex count is not p^n");
            order *= p_;
        }
        if (order != h_.size()) throw NotAProductInstance("vertex count is not p^n");
    }

    // Carries directions from a solved vertex u to its neighbors: for edges
    // (u,v) and (u,z) of different directions i, j the shortest cycle
    // through both is the unique square u,v,x,z, whose edge at v leaving the
    // copy of direction i has direction j and vice versa.
    void transfer_from(std::size_t u) {
        const std::vector<std::size_t>& nb = h_.neighbors(u);
        for (std::size_t v : nb)
            for (std::size_t z : nb) {
                const std::size_t i = direction_of(u, v), j = direction_of(u, z);
                if (v == z || i == j) continue;
                std::size_t square = h_.size();
                for (std::size_t x : h_.neighbors(v)) {
                    if (x == u || !h_.has_edge(x, z) || !h_.has_edge(z, x)) continue;
                    const std::size_t dv = direction_of(v, x), dz = direction_of(x, z);
                    if ((dv != kUnassigned && dv != j) || (dz != kUnassigned && dz != i)) continue;
                    if (square != h_.size())
                        throw NotAProductInstance("two adjacent edges lie on more than one shortest cycle");
                    square = x;
                }
                if (square == h_.size())
                    throw NotAProductInstance("two adjacent edges lie on no length-4 cycle");
                assign(v, square, j);
                assign(square, z, i);
            }
    }

    // Once every direction but one is fully represented at v, the leftover
    // edges all belong to the missing direction.
    bool try_fill(std::size_t v) {
        std::vector<std::size_t> count(n_directions_, 0);
        std::size_t open = 0;
        for (std::size_t w : h_.neighbors(v)) {
            const std::size_t d = direction_of(v, w);
            if (d == kUnassigned)
                ++open;
            else
                ++count[d];
        }
        if (open == 0) return true;
        std::size_t missing = n_directions_;
        for (std::size_t d = 0; d < n_directions_; ++d) {
            if (count[d] > degree_[d]) throw NotAProductInstance("direction degree exceeds the root's");
            if (count[d] == degree_[d]) continue;
            if (missing != n_directions_) return false;  // two directions incomplete
            missing = d;
        }
        if (missing == n_directions_ || count[missing] + open != degree_[missing])
            throw NotAProductInstance("leftover edges do not fit the missing direction");
        for (std::size_t w : h_.neighbors(v))
            if (direction_of(v, w) == kUnassigned) assign(v, w, missing);
        return true;
    }

    void propagate() {
        std::vector<bool> solved(h_.size(), false);
        std::queue<std::size_t> q;
        solved[kRoot] = true;
        q.push(kRoot);
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            transfer_from(u);
            for (std::size_t v : h_.neighbors(u))
                if (!solved[v] && try_fill(v)) {
                    solved[v] = true;
                    q.push(v);
                }
        }
        for (std::size_t v = 0; v < h_.size(); ++v)
            if (!solved[v]) throw NotAProductInstance("direction propagation did not reach every vertex");
    }

    DirectionPartition finalize() const {
        for (std::size_t v = 0; v < h_.size(); ++v) {
            std::vector<std::size_t> count(n_directions_, 0);
            for (std::size_t w : h_.neighbors(v)) {
                const std::size_t d = direction_of(v, w);
                if (d >= n_directions_) throw NotAProductInstance("an edge was left without a direction");
                ++count[d];
            }
            if (count != degree_)
                throw NotAProductInstance("per-direction degrees differ across vertices");
        }
        DirectionPartition part;
        part.direction_count = n_directions_;
        part.direction_of_edge = dir_;
        part.copies.resize(n_directions_);
        for (std::size_t d = 0; d < n_directions_; ++d) {
            Graph sub(h_.size(), false);
            for (const auto& [e, dd] : dir_)
                if (dd == d) sub.add_edge(e.first, e.second);
            part.copies[d].resize(h_.size());
            for (const std::vector<std::size_t>& comp : sub.components()) {
                if (comp.size() != p_)
                    throw NotAProductInstance("a factor copy does not have p vertices");
                for (std::size_t v : comp) part.copies[d][v] = comp;
            }
        }
        return part;
    }

    static constexpr std::size_t kRoot = 0;
    static constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

    const Graph& h_;
    const unsigned long p_;
    std::size_t n_directions_ = 0;
    std::map<Edge, std::size_t> dir_;
    std::vector<std::size_t> degree_;  // per-direction degree at the root
};

}  // namespace

DirectionPartition detect_directions(const Graph& g, unsigned long p) {
    if (p < 3 || p % 2 == 0) throw NotAProductInstance("factors must have odd order p >= 3");
    if (g.size() == 0) throw NotAProductInstance("empty graph");
    const Graph h = build_support(g);
    if (!h.is_connected()) throw NotAProductInstance("a product of connected factors is connected");
    return DirectionSearch(h, p).run();
}

std::vector<std::vector<std::size_t>> neighborhood_direction_classes(const Graph& g, std::size_t u) {
    const Graph h = build_support(g);
    const std::vector<std::size_t>& nb = h.neighbors(u);
    Graph induced(nb.size(), false);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (h.has_edge(nb[i], nb[j])) induced.add_edge(i, j);
    std::vector<std::vector<std::size_t>> classes;
    for (const std::vector<std::size_t>& comp : induced.components()) {
        std::vector<std::size_t> verts;
        for (std::size_t i : comp) verts.push_back(nb[i]);
        std::sort(verts.begin(), verts.end());
        classes.push_back(std::move(verts));
    }
    return classes;
}

}  // namespace mdc
