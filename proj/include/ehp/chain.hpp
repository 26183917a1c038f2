#ifndef EHP_CHAIN_HPP
#define EHP_CHAIN_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ehp/graph.hpp"

namespace ehp {

/// Turn-sequence encoding of a benzenoid chain: the hexagon count plus one
/// character per inner hexagon saying where the next hexagon attaches
/// (L / S / R = kink toward u, straight, kink toward v).
struct ChainSpec {
    int hexagons = 1;
    std::string turns;  // over {L, S, R}, length max(hexagons - 2, 0)

    bool is_linear() const;  // all-S (polyacene)
    bool operator==(const ChainSpec&) const = default;
};

/// Parses "h" or "h:turns", e.g. "4:SS". The turns string must have length
/// exactly max(h - 2, 0). Throws std::invalid_argument on malformed input.
ChainSpec parse_spec(std::string_view text);

std::string to_string(const ChainSpec& spec);

/// All-S spec for the linear chain with h hexagons.
ChainSpec linear_chain(int hexagons);

inline constexpr int kEnumerationCap = 12;

/// All 3^max(h-2,0) turn strings in lexicographic order under the alphabet
/// order L < S < R. Guarded: h beyond the cap throws.
std::vector<ChainSpec> enumerate_chains(int hexagons, int cap = kEnumerationCap);

/// Integer coordinates on the hexagonal lattice; y is measured in units of
/// sqrt(3) so that every hexagon corner lands on an integer pair.
struct LatticePoint {
    int x = 0;
    int y = 0;
    bool operator==(const LatticePoint&) const = default;
};

/// Explicit chain graph plus the bookkeeping the recurrence tests need:
/// the lattice embedding, the six-vertex cycle of each hexagon, and each
/// hexagon's attachment edge. attachment_edges[i].u is the root tracked as
/// the "u side" by the annelation recurrence, .v the "v side".
///
/// `overlapping` is set when two distinct vertices occupy the same lattice
/// point (helicene-like chains); the abstract graph stays valid.
struct BenzenoidGraph {
    Graph graph;
    std::vector<LatticePoint> coords;
    std::vector<std::array<std::uint32_t, 6>> hexagon_cycles;
    std::vector<Edge> attachment_edges;
    bool overlapping = false;

    /// Attachment edge of the last hexagon, available for further annelation.
    Edge attachment() const { return attachment_edges.back(); }
};

/// Builds the chain graph for a validated spec. Hexagon 1 is a 6-cycle on
/// vertices 0..5; every further hexagon appends its 4 new vertices in a
/// fixed traversal order, so graphs are deterministic.
BenzenoidGraph build_graph(const ChainSpec& spec);

}  // namespace ehp

#endif  // EHP_CHAIN_HPP
