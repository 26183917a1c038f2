#include "ehp/chain.hpp"

#include <charconv>
#include <stdexcept>
#include <unordered_map>

namespace ehp {

bool ChainSpec::is_linear() const {
    return turns.find_first_not_of('S') == std::string::npos;
}

ChainSpec parse_spec(std::string_view text) {
    std::string_view head = text;
    std::string_view tail;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        head = text.substr(0, colon);
        tail = text.substr(colon + 1);
    }
    int h = 0;
    auto [end, ec] = std::from_chars(head.data(), head.data() + head.size(), h);
    if (ec != std::errc{} || end != head.data() + head.size()) {
        throw std::invalid_argument("chain spec: malformed hexagon count '" +
                                    std::string(head) + "'");
    }
    if (h < 1) {
        throw std::invalid_argument("chain spec: hexagon count must be at least 1");
    }
    std::size_t expected = h >= 2 ? static_cast<std::size_t>(h - 2) : 0;
    if (tail.size() != expected) {
        throw std::invalid_argument("chain spec: expected " + std::to_string(expected) +
                                    " turn characters, got " + std::to_string(tail.size()));
    }
    for (char c : tail) {
        if (c != 'L' && c != 'S' && c != 'R') {
            throw std::invalid_argument(std::string("chain spec: illegal turn character '") +
                                        c + "'");
        }
    }
    return ChainSpec{h, std::string(tail)};
}

std::string to_string(const ChainSpec& spec) {
    std::string out = std::to_string(spec.hexagons);
    if (!spec.turns.empty()) {
        out += ':';
        out += spec.turns;
    }
    return out;
}

ChainSpec linear_chain(int hexagons) {
    if (hexagons < 1) throw std::invalid_argument("linear_chain: hexagon count must be >= 1");
    return ChainSpec{hexagons,
                     std::string(hexagons >= 2 ? static_cast<std::size_t>(hexagons - 2) : 0, 'S')};
}

std::vector<ChainSpec> enumerate_chains(int hexagons, int cap) {
    if (hexagons < 1) throw std::invalid_argument("enumerate_chains: hexagon count must be >= 1");
    if (hexagons > cap) {
        throw std::invalid_argument("enumerate_chains: h=" + std::to_string(hexagons) +
                                    " exceeds the exhaustive-enumeration cap " +
                                    std::to_string(cap));
    }
    static constexpr char kAlphabet[3] = {'L', 'S', 'R'};
    std::size_t len = hexagons >= 2 ? static_cast<std::size_t>(hexagons - 2) : 0;
    std::size_t count = 1;
    for (std::size_t i = 0; i < len; ++i) count *= 3;

    std::vector<ChainSpec> out;
    out.reserve(count);
    std::string turns(len, 'L');
    std::vector<int> digits(len, 0);
    for (std::size_t n = 0; n < count; ++n) {
        out.push_back(ChainSpec{hexagons, turns});
        for (std::size_t pos = len; pos-- > 0;) {
            if (++digits[pos] < 3) {
                turns[pos] = kAlphabet[digits[pos]];
                break;
            }
            digits[pos] = 0;
            turns[pos] = kAlphabet[0];
        }
    }
    return out;
}

// Lattice conventions. Hexagons have unit circumradius 2 in these scaled
// coordinates; corner j of a hexagon centered at c sits at c + kCorner[j]
// (angle 60j degrees), and the center of the edge-sharing neighbor in
// direction k (angle 30 + 60k degrees) is c + kCenterStep[k]. Two adjacent
// hexagons share exactly the corners k and k+1 of the first, which seen
// from the neighbor are its corners k+4 and k+3:
//
//   kCenterStep[k] + kCorner[k+3] = kCorner[k+1]
//   kCenterStep[k] + kCorner[k+4] = kCorner[k]
//
// The chain grows by one hexagon per step. When a hexagon entered from
// direction k hands the walk to direction k' (k' = k+1 for L, k for S,
// k-1 for R), its attachment edge is (corner[k'+1], corner[k']), oriented
// so that the first endpoint is the recurrence's "u side". That matches
// the three attachment positions used by the rooted update formulas.
namespace {

constexpr std::array<LatticePoint, 6> kCorner = {{
    {2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1},
}};

constexpr std::array<LatticePoint, 6> kCenterStep = {{
    {3, 1}, {0, 2}, {-3, 1}, {-3, -1}, {0, -2}, {3, -1},
}};

constexpr LatticePoint add(LatticePoint a, LatticePoint b) {
    return {a.x + b.x, a.y + b.y};
}

int turn_delta(char turn) {
    switch (turn) {
        case 'L': return 1;
        case 'S': return 0;
        case 'R': return -1;
        default: throw std::invalid_argument(std::string("illegal turn character '") + turn + "'");
    }
}

std::uint64_t pack(LatticePoint p) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
           static_cast<std::uint32_t>(p.y);
}

}  // namespace

BenzenoidGraph build_graph(const ChainSpec& spec) {
    if (spec.hexagons < 1) {
        throw std::invalid_argument("build_graph: hexagon count must be >= 1");
    }
    std::size_t expected = spec.hexagons >= 2 ? static_cast<std::size_t>(spec.hexagons - 2) : 0;
    if (spec.turns.size() != expected) {
        throw std::invalid_argument("build_graph: turn string has wrong length");
    }

    BenzenoidGraph out;
    std::unordered_map<std::uint64_t, std::uint32_t> occupied;

    auto place_vertex = [&](LatticePoint p) {
        std::uint32_t id = out.graph.add_vertex();
        out.coords.push_back(p);
        if (!occupied.emplace(pack(p), id).second) out.overlapping = true;
        return id;
    };

    // Hexagon 1: vertex j at corner j.
    LatticePoint center{0, 0};
    std::array<std::uint32_t, 6> cur;  // vertex id at each corner index
    for (int j = 0; j < 6; ++j) cur[j] = place_vertex(kCorner[j]);
    for (int j = 0; j < 6; ++j) out.graph.add_edge(cur[j], cur[(j + 1) % 6]);
    out.hexagon_cycles.push_back(cur);

    int dir = 0;  // direction toward the next hexagon; fixed for the first step
    for (int i = 2; i <= spec.hexagons; ++i) {
        if (i > 2) dir = (dir + turn_delta(spec.turns[static_cast<std::size_t>(i - 3)]) + 6) % 6;

        std::uint32_t u = cur[(dir + 1) % 6];
        std::uint32_t v = cur[dir % 6];
        out.attachment_edges.push_back({u, v});

        center = add(center, kCenterStep[dir]);
        std::array<std::uint32_t, 6> next;
        next[(dir + 3) % 6] = u;
        next[(dir + 4) % 6] = v;
        // The added path u - w1 - w2 - w3 - w4 - v walks the new hexagon
        // clockwise: corners dir+2, dir+1, dir, dir+5.
        std::uint32_t w1 = place_vertex(add(center, kCorner[(dir + 2) % 6]));
        std::uint32_t w2 = place_vertex(add(center, kCorner[(dir + 1) % 6]));
        std::uint32_t w3 = place_vertex(add(center, kCorner[dir % 6]));
        std::uint32_t w4 = place_vertex(add(center, kCorner[(dir + 5) % 6]));
        next[(dir + 2) % 6] = w1;
        next[(dir + 1) % 6] = w2;
        next[dir % 6] = w3;
        next[(dir + 5) % 6] = w4;

        out.graph.add_edge(u, w1);
        out.graph.add_edge(w1, w2);
        out.graph.add_edge(w2, w3);
        out.graph.add_edge(w3, w4);
        out.graph.add_edge(w4, v);

        cur = next;
        out.hexagon_cycles.push_back(cur);
    }

    // The last hexagon's attachment edge sits opposite its fused edge
    // (straight continuation); nothing attaches there, but the recurrence
    // state after the final step tracks it.
    out.attachment_edges.push_back({cur[(dir + 1) % 6], cur[dir % 6]});
    return out;
}

}  // namespace ehp
