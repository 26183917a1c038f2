#ifndef EHP_RECURRENCE_HPP
#define EHP_RECURRENCE_HPP

#include <vector>

#include "ehp/chain.hpp"
#include "ehp/poly.hpp"

namespace ehp {

/// Where the next attachment edge sits on a freshly fused hexagon, relative
/// to the fused edge uv: a kink on the u side, the opposite edge, or a kink
/// on the v side. L/S/R turn characters map to these in order.
enum class AnnelationCase { kLeft, kStraight, kRight };

AnnelationCase annelation_case(char turn);

/// Fusing a hexagon along the edge uv adds the path u-w1-w2-w3-w4-v. These
/// are the sites whose rooted polynomials have closed update rules: the
/// four new vertices and the three new edges eligible as attachment edges.
enum class HexagonSite {
    kVertexW1,
    kVertexW2,
    kVertexW3,
    kVertexW4,
    kEdgeW1W2,
    kEdgeW2W3,
    kEdgeW3W4,
};

/// Edge-Hosoya polynomial of the graph obtained by fusing a hexagon along
/// an edge e = uv whose endpoints have degree 2, from the host graph's
/// polynomial and its rooted polynomials at u, v and e.
Polynomial annelate_edge_hosoya(const Polynomial& whole, const Polynomial& at_u,
                                const Polynomial& at_v, const Polynomial& at_e);

/// Rooted polynomial at one of the new sites after the same fusion.
Polynomial annelate_rooted(HexagonSite site, const Polynomial& at_u,
                           const Polynomial& at_v, const Polynomial& at_e);

/// Rolling state of the chain recurrence after `hexagons` fusions:
/// the edge-Hosoya polynomial of the chain built so far plus the rooted
/// polynomials at the current attachment edge's endpoints and at the edge
/// itself. The initial state describes a single edge.
struct ChainState {
    Polynomial alpha;  // edge-Hosoya polynomial of the chain
    Polynomial beta;   // rooted at the u side of the attachment edge
    Polynomial gamma;  // rooted at the v side
    Polynomial delta;  // rooted at the attachment edge
    int hexagons = 0;

    static ChainState initial();
};

/// One fusion step; the case picks which new edge becomes the attachment
/// edge for the step after.
ChainState step(const ChainState& state, AnnelationCase c);

/// Folds the recurrence over a chain spec: one case-independent first step,
/// one step per turn character, and a final step whose case only affects
/// the discarded rooted polynomials. Returns the edge-Hosoya polynomial.
Polynomial chain_edge_hosoya(const ChainSpec& spec);

/// Verbose variant keeping the state after every step (states[i] describes
/// the chain with i+1 hexagons).
std::vector<ChainState> chain_states(const ChainSpec& spec);

}  // namespace ehp

#endif  // EHP_RECURRENCE_HPP
