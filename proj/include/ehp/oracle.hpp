#ifndef EHP_ORACLE_HPP
#define EHP_ORACLE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ehp/graph.hpp"
#include "ehp/poly.hpp"

namespace ehp {

/// Line graph: one node per source edge, nodes adjacent when the source
/// edges share an endpoint. Node i corresponds to source_edges[i].
struct LineGraph {
    Graph graph;
    std::vector<Edge> source_edges;
};

/// Histogram of pairwise distances; counts[k] is the number of unordered
/// pairs at distance k, with counts[0] holding the self-pairs (one per
/// element).
struct DistanceHistogram {
    std::vector<std::uint64_t> counts;

    void record(std::size_t distance, std::uint64_t n = 1);
    Wide total() const;
    Polynomial to_polynomial() const;
};

namespace oracle {

/// Standard line-graph construction. Requires at least one edge.
LineGraph line_graph(const Graph& g);

/// Edge-Hosoya polynomial by all-pairs BFS over the line graph:
/// coefficient k counts unordered edge pairs at line-graph distance k,
/// including one self-pair per edge at distance 0.
Polynomial edge_hosoya(const Graph& g);

/// Variant counting pairs by minimum endpoint-to-endpoint distance.
Polynomial hat_edge_hosoya(const Graph& g);

/// Hosoya polynomial: all-pairs vertex distances, self-pairs at 0.
Polynomial vertex_hosoya(const Graph& g);

/// Coefficient k counts edges at distance k from v, where the distance
/// from a vertex to an edge is the smaller endpoint distance. The
/// constant term equals deg(v).
Polynomial rooted_vertex_poly(const Graph& g, std::uint32_t v);

/// Coefficient k counts edges at line-graph distance k from e; the
/// constant term is 1 (e itself).
Polynomial rooted_edge_poly(const Graph& g, Edge e);

/// Random connected graph: uniform labeled tree plus extra random edges.
/// Deterministic for a fixed generator state.
Graph random_connected_graph(std::size_t vertex_count, std::size_t extra_edges,
                             std::mt19937_64& rng);

}  // namespace oracle

}  // namespace ehp

#endif  // EHP_ORACLE_HPP
