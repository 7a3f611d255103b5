#include "mdc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <string_view>
#include <tuple>

#include "mdc/errors.hpp"

namespace mdc {

namespace {

// Iterated neighborhood color refinement with dense re-ranking; the final
// coloring is an isomorphism invariant of (graph, initial coloring).  New
// ranks respect the old ones, so refinement only ever splits classes.
std::vector<std::size_t> refine_from(const Graph& g, std::vector<std::size_t> color,
                                     std::size_t classes) {
    const std::size_t n = g.size();
    while (true) {
        using Signature = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
        std::vector<Signature> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::size_t> out, in;
            for (std::size_t w : g.neighbors(v)) out.push_back(color[w]);
            if (g.directed())
                for (std::size_t w : g.in_neighbors(v)) in.push_back(color[w]);
            std::sort(out.begin(), out.end());
            std::sort(in.begin(), in.end());
            sig[v] = {color[v], std::move(out), std::move(in)};
        }
        std::map<Signature, std::size_t> rank;
        for (const Signature& s : sig) rank.emplace(s, 0);
        std::size_t next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (std::size_t v = 0; v < n; ++v) color[v] = rank.at(sig[v]);
        if (next == classes) return color;
        classes = next;
    }
}

std::vector<std::size_t> refine_colors(const Graph& g) {
    return refine_from(g, std::vector<std::size_t>(g.size(), 0), 1);
}

void check_size(const Graph& g, std::size_t vertex_limit) {
    if (g.size() > vertex_limit) throw TooLarge("graph exceeds the brute-force vertex limit");
}

}  // namespace

bool is_graph_automorphism(const Graph& g, const std::vector<std::size_t>& perm) {
    const std::size_t n = g.size();
    if (perm.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (std::size_t v : perm) {
        if (v >= n || hit[v]) return false;
        hit[v] = true;
    }
    // A vertex bijection sending every arc to an arc is an automorphism:
    // arc images are distinct, and the counts match.
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v : g.neighbors(u))
            if (!g.has_edge(perm[u], perm[v])) return false;
    return true;
}

PermutationGroupSample graph_automorphisms(const Graph& g, std::size_t cap, std::size_t vertex_limit) {
    check_size(g, vertex_limit);
    const std::size_t n = g.size();
    PermutationGroupSample sample;
    sample.degree = n;
    const std::vector<std::size_t> color = refine_colors(g);

    std::vector<std::size_t> img(n, 0);
    std::vector<bool> used(n, false);
    bool truncated = false;
    auto rec = [&](auto&& self, std::size_t v) -> bool {  // false aborts the search
        if (v == n) {
            if (!is_graph_automorphism(g, img)) throw std::logic_error("search produced a non-automorphism");
            sample.permutations.push_back(img);
            if (sample.permutations.size() >= cap) {
                truncated = true;
                return false;
            }
            return true;
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || color[w] != color[v]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u)
                ok = g.has_edge(u, v) == g.has_edge(img[u], w) && g.has_edge(v, u) == g.has_edge(w, img[u]);
            if (!ok || g.has_edge(v, v) != g.has_edge(w, w)) continue;
            img[v] = w;
            used[w] = true;
            const bool keep_going = self(self, v + 1);
            used[w] = false;
            if (!keep_going) return false;
        }
        return true;
    };
    rec(rec, 0);
    sample.complete = !truncated;
    return sample;
}

bool has_regular_cyclic_subgroup(const Graph& g, std::size_t vertex_limit) {
    check_size(g, vertex_limit);
    const std::size_t n = g.size();
    if (n <= 1) return true;
    // A full-cycle automorphism makes the graph vertex-transitive, hence
    // degree-regular.
    for (std::size_t v = 0; v < n; ++v)
        if (g.neighbors(v).size() != g.neighbors(0).size() ||
            g.in_neighbors(v).size() != g.in_neighbors(0).size())
            return false;

    // Search for a labeling v_0..v_{n-1} under which adjacency depends only
    // on the label difference: then v_i -> v_{i+1 mod n} is an n-cycle
    // automorphism.  -1 = difference class undecided.
    std::vector<int> rule(n, -1);
    std::vector<std::size_t> seq{0};
    std::vector<bool> used(n, false);
    used[0] = true;
    auto rec = [&](auto&& self) -> bool {
        const std::size_t k = seq.size();
        if (k == n) return true;
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::vector<std::pair<std::size_t, int>> assigned;
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) {
                const std::size_t fwd = k - i;
                for (auto [d, bit] : {std::pair<std::size_t, int>{fwd, g.has_edge(seq[i], v) ? 1 : 0},
                                      {n - fwd, g.has_edge(v, seq[i]) ? 1 : 0}}) {
                    if (rule[d] == -1) {
                        rule[d] = bit;
                        assigned.emplace_back(d, bit);
                    } else if (rule[d] != bit) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                seq.push_back(v);
                used[v] = true;
                if (self(self)) return true;
                seq.pop_back();
                used[v] = false;
            }
            for (auto [d, bit] : assigned) {
                (void)bit;
                rule[d] = -1;
            }
        }
        return false;
    };
    return rec(rec);
}

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& verts) {
    std::vector<std::size_t> pos(g.size(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = i;
    Graph h(verts.size(), g.directed());
    for (std::size_t u : verts)
        for (std::size_t w : g.neighbors(u))
            if (std::binary_search(verts.begin(), verts.end(), w)) h.add_edge(pos[u], pos[w]);
    return h;
}

// Canonical labeling of a connected graph by individualization-refinement.
// The search explores refinements reachable by repeatedly making one vertex
// of the smallest non-singleton class unique; branches are ranked by the
// class-size histogram at every level, so only paths on the minimal
// invariant sequence survive.  Equal-invariant branches differ at most by
// an automorphism and are all explored.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g) {}

    std::string run() {
        dfs(std::vector<std::size_t>(g_.size(), 0), 1, 0);
        return std::to_string(g_.size()) + ":" + best_leaf_;
    }

private:
    static std::string histogram(const std::vector<std::size_t>& color) {
        std::vector<std::size_t> count;
        for (std::size_t c : color) {
            if (c >= count.size()) count.resize(c + 1, 0);
            ++count[c];
        }
        std::string h;
        for (std::size_t k : count) h += std::to_string(k) + ",";
        return h;
    }

    std::string leaf_string(const std::vector<std::size_t>& color) const {
        const std::size_t n = g_.size();
        std::vector<std::size_t> vertex_at(n);
        for (std::size_t v = 0; v < n; ++v) vertex_at[color[v]] = v;
        std::string s;
        s.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s.push_back(g_.has_edge(vertex_at[i], vertex_at[j]) ? '1' : '0');
        return s;
    }

    void dfs(std::vector<std::size_t> color, std::size_t classes, std::size_t depth) {
        color = refine_from(g_, std::move(color), classes);
        const std::string inv = histogram(color);
        if (depth < best_invs_.size()) {
            const int cmp = inv.compare(best_invs_[depth]);
            if (cmp > 0) return;
            if (cmp < 0) {
                best_invs_.resize(depth);
                best_invs_.push_back(inv);
                best_leaf_.clear();
            }
        } else {
            best_invs_.push_back(inv);
        }

        const std::size_t n = g_.size();
        std::vector<std::size_t> count;
        for (std::size_t c : color) {
            if (c >= count.size()) count.resize(c + 1, 0);
            ++count[c];
        }
        if (count.size() == n) {
            const std::string leaf = leaf_string(color);
            if (best_leaf_.empty() || leaf < best_leaf_) best_leaf_ = leaf;
            return;
        }

        std::size_t target = count.size();
        for (std::size_t c = 0; c < count.size(); ++c)
            if (count[c] > 1 && (target == count.size() || count[c] < count[target])) target = c;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            // Split v off as a new class placed directly before its old one.
            std::vector<std::size_t> child(n);
            for (std::size_t u = 0; u < n; ++u)
                child[u] = color[u] + (color[u] > target || (color[u] == target && u != v) ? 1 : 0);
            child[v] = target;
            dfs(std::move(child), count.size() + 1, depth + 1);
        }
    }

    const Graph& g_;
    std::string best_leaf_;
    std::vector<std::string> best_invs_;
};

}  // namespace

std::string canonical_form(const Graph& g, std::size_t vertex_limit) {
    check_size(g, vertex_limit);
    // Canonicalize each connected component separately; the sorted list of
    // component forms is a canonical form of the whole graph.
    std::vector<std::string> parts;
    for (const std::vector<std::size_t>& comp : g.components()) {
        const Graph h = induced_subgraph(g, comp);
        parts.push_back(CanonicalSearch(h).run());
    }
    std::sort(parts.begin(), parts.end());
    std::string body;
    for (const std::string& p : parts) body += p + "|";
    return (g.directed() ? "d" : "u") + std::to_string(g.size()) + ":" + body;
}

bool graphs_isomorphic(const Graph& a, const Graph& b, std::size_t vertex_limit) {
    if (a.size() != b.size() || a.directed() != b.directed()) return false;
    auto degrees = [](const Graph& g) {
        std::vector<std::pair<std::size_t, std::size_t>> d;
        for (std::size_t v = 0; v < g.size(); ++v)
            d.emplace_back(g.neighbors(v).size(), g.in_neighbors(v).size());
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return false;
    return canonical_form(a, vertex_limit) == canonical_form(b, vertex_limit);
}

namespace {

// Divisibility chains s_1 | s_2 | ... | s_k with product m and s_1 >= 2;
// `prev` is the factor each remaining entry must extend (1 at the root).
void chains_of_length(unsigned long m, std::size_t k, unsigned long prev,
                      std::vector<unsigned long>& cur, std::vector<std::vector<unsigned long>>& out) {
    if (k == 0) {
        if (m == 1) out.push_back(cur);
        return;
    }
    for (unsigned long s = std::max<unsigned long>(prev, 2); s <= m; ++s) {
        if (m % s != 0 || s % prev != 0) continue;
        cur.push_back(s);
        chains_of_length(m / s, k - 1, s, cur, out);
        cur.pop_back();
    }
}

struct TupleGroup {
    std::vector<unsigned long> factors;
    std::vector<Vec> elements;  // mixed-radix order

    std::size_t index_of(const Vec& t) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < factors.size(); ++i)
            idx = idx * factors[i] + t[i].get_ui();
        return idx;
    }
    Vec add(const Vec& a, const Vec& b) const {
        Vec c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % Int(factors[i]);
        return c;
    }
    Vec neg(const Vec& a) const {
        Vec c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = (Int(factors[i]) - a[i]) % Int(factors[i]);
        return c;
    }
};

TupleGroup make_tuple_group(const std::vector<unsigned long>& factors) {
    TupleGroup tg;
    tg.factors = factors;
    Vec cur(factors.size(), Int(0));
    while (true) {
        tg.elements.push_back(cur);
        std::size_t i = factors.size();
        bool done = factors.empty();
        while (i-- > 0) {
            ++cur[i];
            if (cur[i] < Int(factors[i])) break;
            cur[i] = 0;
            if (i == 0) done = true;
        }
        if (done) return tg;
    }
}

Graph cayley_graph(const TupleGroup& tg, const std::vector<Vec>& jumps, bool directed) {
    Graph c(tg.elements.size(), directed);
    for (const Vec& u : tg.elements)
        for (const Vec& a : jumps) c.add_edge(tg.index_of(u), tg.index_of(tg.add(u, a)));
    return c;
}

// True when `jumps` is the lexicographically smallest set in its orbit
// under the group automorphisms.
bool orbit_canonical(const QuotientGroup& q, const std::vector<GroupAutomorphism>& auts,
                     const std::vector<Vec>& jumps) {
    for (const GroupAutomorphism& f : auts) {
        std::vector<Vec> image;
        image.reserve(jumps.size());
        for (const Vec& a : jumps) image.push_back(apply_automorphism(q, f, a));
        std::sort(image.begin(), image.end());
        if (image < jumps) return false;
    }
    return true;
}

// All size-`want` subsets of `pool` (by index), invoking `emit`; returns
// false if `emit` asked to stop.
bool for_each_subset(std::size_t pool, std::size_t want,
                     const std::function<bool(const std::vector<std::size_t>&)>& emit) {
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
        if (pick.size() == want) return emit(pick);
        if (pool - from < want - pick.size()) return true;
        for (std::size_t i = from; i < pool; ++i) {
            pick.push_back(i);
            if (!self(self, i + 1)) return false;
            pick.pop_back();
        }
        return true;
    };
    return rec(rec, 0);
}

}  // namespace

std::size_t dimension_bruteforce(const Graph& g, std::size_t vertex_limit) {
    check_size(g, vertex_limit);
    const std::size_t m = g.size();
    if (m == 0) throw DimensionMismatch("empty graph has no realization");
    if (m == 1) return 0;
    const std::size_t out0 = g.neighbors(0).size(), in0 = g.in_neighbors(0).size();
    for (std::size_t v = 0; v < m; ++v) {
        if (g.neighbors(v).size() != out0 || g.in_neighbors(v).size() != in0)
            throw NotVertexTransitive("graph is not degree-regular");
        if (g.has_edge(v, v)) throw NotVertexTransitive("Cayley graphs have no loops");
    }

    const std::size_t max_rank = std::bit_width(m) - 1;  // floor(log2 m)
    for (std::size_t k = 1; k <= max_rank; ++k) {
        std::vector<std::vector<unsigned long>> chains;
        std::vector<unsigned long> cur;
        chains_of_length(m, k, 1, cur, chains);
        for (const std::vector<unsigned long>& chain : chains) {
            Vec diag_entries;
            for (unsigned long s : chain) diag_entries.push_back(Int(s));
            const QuotientGroup q(IntMatrix::diagonal(diag_entries));
            const std::vector<GroupAutomorphism> auts = group_automorphisms(q);
            const TupleGroup tg = make_tuple_group(chain);

            // Nonzero elements as jump candidates; in undirected mode the
            // candidates are negation orbits (pairs and involutions).
            std::vector<Vec> nonzero(tg.elements.begin() + 1, tg.elements.end());
            bool found = false;
            auto try_jumps = [&](std::vector<Vec> jumps) -> bool {  // false = stop searching
                std::sort(jumps.begin(), jumps.end());
                if (!orbit_canonical(q, auts, jumps)) return true;
                if (graphs_isomorphic(g, cayley_graph(tg, jumps, g.directed()), vertex_limit)) {
                    found = true;
                    return false;
                }
                return true;
            };
            if (g.directed()) {
                for_each_subset(nonzero.size(), out0, [&](const std::vector<std::size_t>& pick) {
                    std::vector<Vec> jumps;
                    for (std::size_t i : pick) jumps.push_back(nonzero[i]);
                    return try_jumps(std::move(jumps));
                });
            } else {
                std::vector<Vec> involutions;
                std::vector<std::pair<Vec, Vec>> pairs;
                for (const Vec& a : nonzero) {
                    const Vec na = tg.neg(a);
                    if (na == a)
                        involutions.push_back(a);
                    else if (a < na)
                        pairs.emplace_back(a, na);
                }
                // Choose p pairs and q involutions with 2p + q = degree.
                for (std::size_t p = 0; 2 * p <= out0 && p <= pairs.size(); ++p) {
                    const std::size_t need = out0 - 2 * p;
                    if (need > involutions.size()) continue;
                    for_each_subset(pairs.size(), p, [&](const std::vector<std::size_t>& pp) {
                        return for_each_subset(involutions.size(), need,
                                               [&](const std::vector<std::size_t>& qq) {
                                                   std::vector<Vec> jumps;
                                                   for (std::size_t i : pp) {
                                                       jumps.push_back(pairs[i].first);
                                                       jumps.push_back(pairs[i].second);
                                                   }
                                                   for (std::size_t i : qq) jumps.push_back(involutions[i]);
                                                   return try_jumps(std::move(jumps));
                                               });
                    });
                    if (found) break;
                }
            }
            if (found) return k;
        }
    }
    throw NotVertexTransitive("no abelian Cayley realization found");
}

Int element_order_bruteforce(const QuotientGroup& g, const Vec& a) {
    const Vec zero = g.zero();
    Vec sum = g.canonicalize(a);
    Int t = 1;
    while (sum != zero) {
        sum = g.add(sum, a);
        ++t;
    }
    return t;
}

}  // namespace mdc
