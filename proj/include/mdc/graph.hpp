#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mdc {

// Finite simple graph or digraph on vertices 0..n-1 with sorted adjacency
// lists.  Undirected edges are stored in both endpoint lists; parallel
// edges are merged on insertion.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, bool directed) : directed_(directed), out_(n), in_(n) {}

    std::size_t size() const { return out_.size(); }
    bool directed() const { return directed_; }

    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    // Out-neighbors in ascending order (all neighbors when undirected).
    const std::vector<std::size_t>& neighbors(std::size_t u) const { return out_[u]; }
    const std::vector<std::size_t>& in_neighbors(std::size_t u) const { return directed_ ? in_[u] : out_[u]; }

    std::size_t edge_count() const;
    // Every edge once: ordered pairs when directed, pairs with u <= v otherwise.
    std::vector<std::pair<std::size_t, std::size_t>> edge_list() const;

    // Connectivity in the weak sense (edge directions ignored).
    std::vector<std::size_t> component_of(std::size_t start) const;
    std::vector<std::vector<std::size_t>> components() const;
    bool is_connected() const;

    // BFS levels following edge directions; SIZE_MAX marks unreachable.
    std::vector<std::size_t> distances_from(std::size_t source) const;

private:
    bool directed_ = false;
    std::vector<std::vector<std::size_t>> out_, in_;
};

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
std::string graph_to_dot(const Graph& g, const std::vector<std::string>& labels = {});

}  // namespace mdc
