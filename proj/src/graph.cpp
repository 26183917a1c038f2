#include "ehp/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ehp {

std::uint32_t Graph::add_vertex() {
    adj_.emplace_back();
    return static_cast<std::uint32_t>(adj_.size() - 1);
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= adj_.size() || v >= adj_.size()) {
        throw std::invalid_argument("add_edge: vertex id out of range");
    }
    if (u == v) {
        throw std::invalid_argument("add_edge: loops are not allowed");
    }
    if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end()) {
        throw std::invalid_argument("add_edge: duplicate edge");
    }
    edges_.push_back({u, v});
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

std::optional<std::size_t> Graph::find_edge(std::uint32_t u, std::uint32_t v) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return i;
    }
    return std::nullopt;
}

bool Graph::is_connected() const {
    if (adj_.empty()) return true;
    std::vector<int> dist = bfs_distances(*this, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::vector<int> bfs_distances(const Graph& g, std::uint32_t source) {
    if (source >= g.vertex_count()) {
        throw std::invalid_argument("bfs_distances: source out of range");
    }
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<std::uint32_t> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        std::uint32_t v = frontier.front();
        frontier.pop();
        for (std::uint32_t w : g.neighbors(v)) {
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges()) {
        out << e.u << " " << e.v << "\n";
    }
}

Graph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::uint32_t max_id = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::uint32_t u, v;
        if (!(fields >> u >> v)) {
            throw std::invalid_argument("read_edge_list: malformed line: " + line);
        }
        std::string trailing;
        if (fields >> trailing) {
            throw std::invalid_argument("read_edge_list: trailing tokens: " + line);
        }
        edges.push_back({u, v});
        max_id = std::max({max_id, u, v});
    }
    Graph g(edges.empty() ? 0 : max_id + 1);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

}  // namespace ehp
