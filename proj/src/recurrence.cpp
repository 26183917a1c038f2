#include "ehp/recurrence.hpp"

#include <stdexcept>

namespace ehp {

namespace {

// Contributions of the six new edges among themselves and toward the host
// graph, counted once per fusion.
const Polynomial kWholePad{5, 4, 3, 3};
// New-vertex roots: one hop from the old root (sites w1/w4)...
const Polynomial kNearVertexPad{2, 1, 2};
// ...or two hops (sites w2/w3).
const Polynomial kFarVertexPad{2, 2, 1};
// New-edge roots.
const Polynomial kNewEdgePad{1, 2, 1, 1};

}  // namespace

AnnelationCase annelation_case(char turn) {
    switch (turn) {
        case 'L': return AnnelationCase::kLeft;
        case 'S': return AnnelationCase::kStraight;
        case 'R': return AnnelationCase::kRight;
        default: throw std::invalid_argument(std::string("illegal turn character '") + turn + "'");
    }
}

Polynomial annelate_edge_hosoya(const Polynomial& whole, const Polynomial& at_u,
                                const Polynomial& at_v, const Polynomial& at_e) {
    Polynomial roots = at_u + at_v;
    return whole + roots.shifted(1) + roots.shifted(2) + at_e.shifted(2) + kWholePad;
}

Polynomial annelate_rooted(HexagonSite site, const Polynomial& at_u,
                           const Polynomial& at_v, const Polynomial& at_e) {
    switch (site) {
        case HexagonSite::kVertexW1: return at_u.shifted(1) + kNearVertexPad;
        case HexagonSite::kVertexW2: return at_u.shifted(2) + kFarVertexPad;
        case HexagonSite::kVertexW3: return at_v.shifted(2) + kFarVertexPad;
        case HexagonSite::kVertexW4: return at_v.shifted(1) + kNearVertexPad;
        case HexagonSite::kEdgeW1W2: return at_u.shifted(2) + kNewEdgePad;
        case HexagonSite::kEdgeW2W3: return at_e.shifted(2) + kNewEdgePad;
        case HexagonSite::kEdgeW3W4: return at_v.shifted(2) + kNewEdgePad;
    }
    throw std::logic_error("annelate_rooted: bad site");
}

ChainState ChainState::initial() {
    return ChainState{Polynomial{1}, Polynomial{1}, Polynomial{1}, Polynomial{1}, 0};
}

ChainState step(const ChainState& state, AnnelationCase c) {
    ChainState next;
    next.alpha = annelate_edge_hosoya(state.alpha, state.beta, state.gamma, state.delta);
    switch (c) {
        case AnnelationCase::kLeft:
            next.beta = annelate_rooted(HexagonSite::kVertexW1, state.beta, state.gamma, state.delta);
            next.gamma = annelate_rooted(HexagonSite::kVertexW2, state.beta, state.gamma, state.delta);
            next.delta = annelate_rooted(HexagonSite::kEdgeW1W2, state.beta, state.gamma, state.delta);
            break;
        case AnnelationCase::kStraight:
            next.beta = annelate_rooted(HexagonSite::kVertexW2, state.beta, state.gamma, state.delta);
            next.gamma = annelate_rooted(HexagonSite::kVertexW3, state.beta, state.gamma, state.delta);
            next.delta = annelate_rooted(HexagonSite::kEdgeW2W3, state.beta, state.gamma, state.delta);
            break;
        case AnnelationCase::kRight:
            next.beta = annelate_rooted(HexagonSite::kVertexW3, state.beta, state.gamma, state.delta);
            next.gamma = annelate_rooted(HexagonSite::kVertexW4, state.beta, state.gamma, state.delta);
            next.delta = annelate_rooted(HexagonSite::kEdgeW3W4, state.beta, state.gamma, state.delta);
            break;
    }
    next.hexagons = state.hexagons + 1;
    return next;
}

namespace {

void validate(const ChainSpec& spec) {
    if (spec.hexagons < 1) {
        throw std::invalid_argument("chain recurrence: hexagon count must be >= 1");
    }
    std::size_t expected = spec.hexagons >= 2 ? static_cast<std::size_t>(spec.hexagons - 2) : 0;
    if (spec.turns.size() != expected) {
        throw std::invalid_argument("chain recurrence: turn string has wrong length");
    }
}

}  // namespace

Polynomial chain_edge_hosoya(const ChainSpec& spec) {
    validate(spec);
    ChainState state = step(ChainState::initial(), AnnelationCase::kStraight);
    for (char t : spec.turns) state = step(state, annelation_case(t));
    if (spec.hexagons >= 2) state = step(state, AnnelationCase::kStraight);
    return state.alpha;
}

std::vector<ChainState> chain_states(const ChainSpec& spec) {
    validate(spec);
    std::vector<ChainState> states;
    states.reserve(static_cast<std::size_t>(spec.hexagons));
    states.push_back(step(ChainState::initial(), AnnelationCase::kStraight));
    for (char t : spec.turns) states.push_back(step(states.back(), annelation_case(t)));
    if (spec.hexagons >= 2) states.push_back(step(states.back(), AnnelationCase::kStraight));
    return states;
}

}  // namespace ehp
