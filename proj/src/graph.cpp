#include "mdc/graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "mdc/errors.hpp"

namespace mdc {

namespace {

void insert_sorted(std::vector<std::size_t>& list, std::size_t v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
}

}  // namespace

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size()) throw DimensionMismatch("edge endpoint out of range");
    insert_sorted(out_[u], v);
    if (directed_) {
        insert_sorted(in_[v], u);
    } else if (u != v) {
        insert_sorted(out_[v], u);
    }
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    if (u >= size() || v >= size()) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0, loops = 0;
    for (std::size_t u = 0; u < size(); ++u) {
        total += out_[u].size();
        if (has_edge(u, u)) ++loops;
    }
    return directed_ ? total : (total + loops) / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edge_list() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v : out_[u])
            if (directed_ || u <= v) edges.emplace_back(u, v);
    return edges;
}

std::vector<std::size_t> Graph::component_of(std::size_t start) const {
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> queue{start}, comp;
    seen[start] = true;
    while (!queue.empty()) {
        const std::size_t u = queue.back();
        queue.pop_back();
        comp.push_back(u);
        auto visit = [&](std::size_t v) {
            if (!seen[v]) {
                seen[v] = true;
                queue.push_back(v);
            }
        };
        for (std::size_t v : out_[u]) visit(v);
        if (directed_)
            for (std::size_t v : in_[u]) visit(v);
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

std::vector<std::vector<std::size_t>> Graph::components() const {
    std::vector<bool> seen(size(), false);
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t s = 0; s < size(); ++s) {
        if (seen[s]) continue;
        comps.push_back(component_of(s));
        for (std::size_t v : comps.back()) seen[v] = true;
    }
    return comps;
}

bool Graph::is_connected() const {
    return size() == 0 || component_of(0).size() == size();
}

std::vector<std::size_t> Graph::distances_from(std::size_t source) const {
    std::vector<std::size_t> dist(size(), std::numeric_limits<std::size_t>::max());
    std::vector<std::size_t> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t u = queue[head];
        for (std::size_t v : out_[u])
            if (dist[v] == std::numeric_limits<std::size_t>::max()) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n_vertices"] = g.size();
    j["directed"] = g.directed();
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edge_list()) edges.push_back({u, v});
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n_vertices") || !j.contains("edges"))
        throw ParseError("graph JSON requires n_vertices and edges");
    if (!j["n_vertices"].is_number_unsigned()) throw ParseError("n_vertices must be a nonnegative integer");
    Graph g(j["n_vertices"].get<std::size_t>(), j.value("directed", false));
    if (!j["edges"].is_array()) throw ParseError("edges must be an array of [u, v] pairs");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw ParseError("edges must be an array of [u, v] pairs");
        const std::size_t u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
        if (u >= g.size() || v >= g.size()) throw ParseError("edge endpoint out of range");
        g.add_edge(u, v);
    }
    return g;
}

std::string graph_to_dot(const Graph& g, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << (g.directed() ? "digraph" : "graph") << " G {\n";
    for (std::size_t u = 0; u < g.size(); ++u) {
        os << "  " << u;
        if (u < labels.size()) os << " [label=\"" << labels[u] << "\"]";
        os << ";\n";
    }
    const char* arrow = g.directed() ? " -> " : " -- ";
    for (const auto& [u, v] : g.edge_list()) os << "  " << u << arrow << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace mdc
