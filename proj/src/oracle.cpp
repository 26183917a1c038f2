#include "ehp/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehp {

void DistanceHistogram::record(std::size_t distance, std::uint64_t n) {
    if (counts.size() <= distance) counts.resize(distance + 1, 0);
    counts[distance] = checked::add(counts[distance], n);
}

Wide DistanceHistogram::total() const {
    Wide sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
}

Polynomial DistanceHistogram::to_polynomial() const {
    return Polynomial(counts);
}

namespace oracle {

namespace {

void require_connected(const std::vector<int>& dist, const char* op) {
    if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
        throw std::invalid_argument(std::string(op) + ": graph is not connected");
    }
}

/// Unordered-pair distance histogram of g, plus one self-pair per vertex.
DistanceHistogram pair_histogram(const Graph& g, const char* op) {
    DistanceHistogram hist;
    std::size_t n = g.vertex_count();
    if (n > 0) hist.record(0, n);
    for (std::uint32_t s = 0; s < n; ++s) {
        std::vector<int> dist = bfs_distances(g, s);
        require_connected(dist, op);
        for (std::uint32_t t = s + 1; t < n; ++t) {
            hist.record(static_cast<std::size_t>(dist[t]));
        }
    }
    return hist;
}

}  // namespace

LineGraph line_graph(const Graph& g) {
    if (g.edge_count() == 0) {
        throw std::invalid_argument("line_graph: source graph has no edges");
    }
    LineGraph lg;
    lg.source_edges = g.edges();
    lg.graph = Graph(g.edge_count());
    // Edges sharing endpoint v become a clique among v's incident edges.
    std::vector<std::vector<std::uint32_t>> incident(g.vertex_count());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        incident[g.edges()[i].u].push_back(static_cast<std::uint32_t>(i));
        incident[g.edges()[i].v].push_back(static_cast<std::uint32_t>(i));
    }
    // Simple edges share at most one endpoint, so each adjacent pair shows
    // up in exactly one vertex clique.
    for (const auto& ids : incident) {
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                lg.graph.add_edge(ids[a], ids[b]);
            }
        }
    }
    return lg;
}

Polynomial edge_hosoya(const Graph& g) {
    return pair_histogram(line_graph(g).graph, "edge_hosoya").to_polynomial();
}

Polynomial hat_edge_hosoya(const Graph& g) {
    std::size_t n = g.vertex_count();
    std::size_t m = g.edge_count();
    if (m == 0) {
        throw std::invalid_argument("hat_edge_hosoya: graph has no edges");
    }
    std::vector<std::vector<int>> dist(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        dist[v] = bfs_distances(g, v);
        require_connected(dist[v], "hat_edge_hosoya");
    }
    DistanceHistogram hist;
    hist.record(0, m);  // self-pairs
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            int d = std::min({dist[edges[i].u][edges[j].u], dist[edges[i].u][edges[j].v],
                              dist[edges[i].v][edges[j].u], dist[edges[i].v][edges[j].v]});
            hist.record(static_cast<std::size_t>(d));
        }
    }
    return hist.to_polynomial();
}

Polynomial vertex_hosoya(const Graph& g) {
    if (g.vertex_count() == 0) {
        throw std::invalid_argument("vertex_hosoya: empty graph");
    }
    return pair_histogram(g, "vertex_hosoya").to_polynomial();
}

Polynomial rooted_vertex_poly(const Graph& g, std::uint32_t v) {
    if (v >= g.vertex_count()) {
        throw std::invalid_argument("rooted_vertex_poly: vertex not in graph");
    }
    std::vector<int> dist = bfs_distances(g, v);
    require_connected(dist, "rooted_vertex_poly");
    DistanceHistogram hist;
    for (const Edge& e : g.edges()) {
        hist.record(static_cast<std::size_t>(std::min(dist[e.u], dist[e.v])));
    }
    return hist.to_polynomial();
}

Polynomial rooted_edge_poly(const Graph& g, Edge e) {
    auto idx = g.find_edge(e.u, e.v);
    if (!idx) {
        throw std::invalid_argument("rooted_edge_poly: edge not in graph");
    }
    LineGraph lg = line_graph(g);
    std::vector<int> dist = bfs_distances(lg.graph, static_cast<std::uint32_t>(*idx));
    require_connected(dist, "rooted_edge_poly");
    DistanceHistogram hist;
    for (int d : dist) hist.record(static_cast<std::size_t>(d));
    return hist.to_polynomial();
}

Graph random_connected_graph(std::size_t vertex_count, std::size_t extra_edges,
                             std::mt19937_64& rng) {
    if (vertex_count < 2) {
        throw std::invalid_argument("random_connected_graph: need at least 2 vertices");
    }
    Graph g(vertex_count);
    // Decode a random Pruefer sequence into a uniform labeled tree.
    std::size_t n = vertex_count;
    std::vector<std::uint32_t> seq(n >= 2 ? n - 2 : 0);
    for (auto& s : seq) s = static_cast<std::uint32_t>(rng() % n);
    std::vector<std::size_t> deg(n, 1);
    for (std::uint32_t s : seq) ++deg[s];
    std::vector<bool> used(n, false);
    for (std::uint32_t s : seq) {
        for (std::uint32_t leaf = 0; leaf < n; ++leaf) {
            if (deg[leaf] == 1 && !used[leaf]) {
                g.add_edge(leaf, s);
                used[leaf] = true;
                --deg[s];
                break;
            }
        }
    }
    std::uint32_t a = 0, b = 0;
    bool have_a = false;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (deg[v] == 1 && !used[v]) {
            if (!have_a) {
                a = v;
                have_a = true;
            } else {
                b = v;
            }
        }
    }
    g.add_edge(a, b);

    std::size_t added = 0;
    for (std::size_t attempt = 0; added < extra_edges && attempt < 50 * (extra_edges + 1);
         ++attempt) {
        auto u = static_cast<std::uint32_t>(rng() % n);
        auto v = static_cast<std::uint32_t>(rng() % n);
        if (u == v || g.find_edge(u, v)) continue;
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

}  // namespace oracle

}  // namespace ehp
