// Test-only helpers: definition-level index oracles computed straight from
// distance double-sums, plus a small-graph isomorphism search. These stay
// independent of the polynomial pipeline they are used to check.
#ifndef EHP_TESTS_SUPPORT_HPP
#define EHP_TESTS_SUPPORT_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ehp/graph.hpp"
#include "ehp/oracle.hpp"
#include "ehp/poly.hpp"

namespace ehp::testing {

struct DistanceSums {
    Wide linear = 0;   // sum of d(e,f) over ordered edge pairs
    Wide squared = 0;  // sum of d(e,f)^2 over ordered edge pairs
};

inline DistanceSums edge_distance_sums(const Graph& g) {
    LineGraph lg = oracle::line_graph(g);
    DistanceSums sums;
    for (std::uint32_t s = 0; s < lg.graph.vertex_count(); ++s) {
        for (int d : bfs_distances(lg.graph, s)) {
            if (d < 0) throw std::invalid_argument("edge_distance_sums: disconnected line graph");
            sums.linear += static_cast<Wide>(d);
            sums.squared += static_cast<Wide>(d) * static_cast<Wide>(d);
        }
    }
    return sums;
}

/// Edge-Wiener index as half the ordered double-sum of edge distances.
inline Wide edge_wiener_double_sum(const Graph& g) {
    return edge_distance_sums(g).linear / 2;
}

/// Edge-hyper-Wiener index as a quarter of (double-sum + squared double-sum).
inline Wide edge_hyper_wiener_double_sum(const Graph& g) {
    DistanceSums sums = edge_distance_sums(g);
    Wide combined = sums.linear + sums.squared;
    if (combined % 4 != 0) {
        throw std::logic_error("edge_hyper_wiener_double_sum: sums not divisible by 4");
    }
    return combined / 4;
}

namespace detail {

inline bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map,
                           std::vector<bool>& used, std::uint32_t next) {
    if (next == a.vertex_count()) return true;
    for (std::uint32_t candidate = 0; candidate < b.vertex_count(); ++candidate) {
        if (used[candidate] || a.degree(next) != b.degree(candidate)) continue;
        bool consistent = true;
        for (std::uint32_t nb : a.neighbors(next)) {
            if (nb < next && !b.find_edge(static_cast<std::uint32_t>(map[nb]), candidate)) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        map[next] = static_cast<int>(candidate);
        used[candidate] = true;
        if (extend_mapping(a, b, map, used, next + 1)) return true;
        used[candidate] = false;
        map[next] = -1;
    }
    return false;
}

}  // namespace detail

/// Exhaustive isomorphism search; intended for graphs of at most ~20
/// vertices. The mapping is built in vertex order with degree pruning.
inline bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> map(a.vertex_count(), -1);
    std::vector<bool> used(b.vertex_count(), false);
    return detail::extend_mapping(a, b, map, used, 0);
}

}  // namespace ehp::testing

#endif  // EHP_TESTS_SUPPORT_HPP
