#ifndef EHP_POLYACENE_HPP
#define EHP_POLYACENE_HPP

#include "ehp/poly.hpp"

namespace ehp {

/// Closed formulas for linear chains (polyacenes): rational functions with
/// denominator (x^2 - 1) or (x^2 - 1)^2 that divide their numerators
/// exactly. Each evaluation asserts the zero remainder, so a transcription
/// slip in a numerator cannot produce a silently wrong polynomial.
namespace polyacene {

/// Rooted polynomial at either endpoint of the attachment edge of the
/// linear chain with h hexagons (both endpoints agree by symmetry). h >= 0;
/// h = 0 is the single-edge base case.
Polynomial rooted_vertex(int hexagons);

/// Rooted polynomial at the attachment edge itself. h >= 0.
Polynomial rooted_edge(int hexagons);

/// Edge-Hosoya polynomial of the linear chain with h hexagons. h >= 1.
Polynomial edge_hosoya(int hexagons);

}  // namespace polyacene

}  // namespace ehp

#endif  // EHP_POLYACENE_HPP
