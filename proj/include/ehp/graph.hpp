#ifndef EHP_GRAPH_HPP
#define EHP_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace ehp {

/// Unordered vertex pair, stored in insertion orientation.
struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
};

/// Simple undirected graph: vertex list, edge list, adjacency lists.
/// Edges keep their insertion index, which downstream code uses as the
/// line-graph node id.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count) : adj_(vertex_count) {}

    std::uint32_t add_vertex();
    /// Adds edge {u, v}. Loops and duplicate edges are rejected.
    void add_edge(std::uint32_t u, std::uint32_t v);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_.at(v); }
    std::size_t degree(std::uint32_t v) const { return adj_.at(v).size(); }

    std::optional<std::size_t> find_edge(std::uint32_t u, std::uint32_t v) const;
    bool is_connected() const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

/// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, std::uint32_t source);

/// Edge-list text format: one "u v" pair per line, 0-based vertex ids.
void write_edge_list(std::ostream& out, const Graph& g);
/// Reads the same format; the vertex count is the largest id seen plus one.
Graph read_edge_list(std::istream& in);

}  // namespace ehp

#endif  // EHP_GRAPH_HPP
