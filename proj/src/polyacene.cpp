#include "ehp/polyacene.hpp"

#include <stdexcept>

namespace ehp {
namespace polyacene {

namespace {

const SignedPolynomial kXSquaredMinusOne{-1, 0, 1};

std::size_t twice(int hexagons) {
    return 2 * static_cast<std::size_t>(hexagons);
}

}  // namespace

// beta_h = gamma_h = [x^{2h} (2x^2 + 2x + 1) - (x^2 + 2x + 2)] / (x^2 - 1)
Polynomial rooted_vertex(int hexagons) {
    if (hexagons < 0) throw std::invalid_argument("polyacene::rooted_vertex: negative h");
    SignedPolynomial numerator =
        SignedPolynomial{1, 2, 2}.shifted(twice(hexagons)) - SignedPolynomial{2, 2, 1};
    return divide_exact(numerator, kXSquaredMinusOne).to_polynomial();
}

// delta_h = [x^{2h} (x^3 + 2x^2 + 2x) - (x^3 + x^2 + 2x + 1)] / (x^2 - 1)
Polynomial rooted_edge(int hexagons) {
    if (hexagons < 0) throw std::invalid_argument("polyacene::rooted_edge: negative h");
    SignedPolynomial numerator =
        SignedPolynomial{0, 2, 2, 1}.shifted(twice(hexagons)) - SignedPolynomial{1, 2, 1, 1};
    return divide_exact(numerator, kXSquaredMinusOne).to_polynomial();
}

// alpha_h = [ x^{2h+1} (2 + 6x + 10x^2 + 6x^3 + x^4)
//           + 2h x^7 - (9h+1) x^5 - (7h+5) x^4 - (h+10) x^3
//           + 2(h-4) x^2 + 2(4h-1) x + (5h+1) ] / (x^2 - 1)^2
Polynomial edge_hosoya(int hexagons) {
    if (hexagons < 1) throw std::invalid_argument("polyacene::edge_hosoya: h must be >= 1");
    std::int64_t h = hexagons;
    SignedPolynomial numerator =
        SignedPolynomial{2, 6, 10, 6, 1}.shifted(twice(hexagons) + 1) +
        SignedPolynomial{5 * h + 1, 2 * (4 * h - 1), 2 * (h - 4), -(h + 10),
                         -(7 * h + 5), -(9 * h + 1), 0, 2 * h};
    SignedPolynomial quotient =
        divide_exact(divide_exact(numerator, kXSquaredMinusOne), kXSquaredMinusOne);
    return quotient.to_polynomial();
}

}  // namespace polyacene
}  // namespace ehp
