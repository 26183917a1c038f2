#ifndef EHP_INDICES_HPP
#define EHP_INDICES_HPP

#include <cstdint>

#include "ehp/poly.hpp"

namespace ehp {

/// Edge-Wiener index of the graph whose edge-Hosoya polynomial is p:
/// the derivative evaluated at 1, i.e. sum of k * coeff(k). Accumulation
/// runs in Acc with checked arithmetic; the default 128-bit accumulator
/// covers every chain that fits in memory, the 64-bit instantiation exists
/// to exercise the overflow contract.
template <typename Acc = Wide>
Acc edge_wiener(const Polynomial& p) {
    Acc total = 0;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) {
        Acc term = checked::mul<Acc>(static_cast<Acc>(k), static_cast<Acc>(p.coeffs()[k]));
        total = checked::add(total, term);
    }
    return total;
}

/// Edge-hyper-Wiener index: H'(1) + H''(1)/2, computed as
/// (2 H'(1) + H''(1)) / 2 in exact integers. H''(1) = sum k(k-1) coeff(k)
/// is always even, which is asserted rather than assumed.
template <typename Acc = Wide>
Acc edge_hyper_wiener(const Polynomial& p) {
    Acc first = edge_wiener<Acc>(p);
    Acc second = 0;
    for (std::size_t k = 2; k < p.coeffs().size(); ++k) {
        Acc pairs = checked::mul<Acc>(static_cast<Acc>(k), static_cast<Acc>(k - 1));
        second = checked::add(second, checked::mul<Acc>(pairs, static_cast<Acc>(p.coeffs()[k])));
    }
    if (second % 2 != 0) {
        throw std::domain_error("edge_hyper_wiener: odd second derivative, input is not a distance polynomial");
    }
    return checked::add(first, static_cast<Acc>(second / 2));
}

/// Conversion to the min-endpoint-distance variant:
/// hat(x) = (p(x) - m) / x + m, valid when p's constant term is the edge
/// count m. Inverse of from_hat.
Polynomial to_hat(const Polynomial& p, std::uint64_t edge_count);

/// Conversion back: p(x) = x (hat(x) - m) + m. Requires hat's constant
/// term (self-pairs plus adjacent pairs) to be at least m.
Polynomial from_hat(const Polynomial& hat, std::uint64_t edge_count);

/// Scalar descriptors derived from an edge-Hosoya polynomial.
struct IndexReport {
    std::uint64_t edge_count = 0;  // constant term of the polynomial
    std::size_t degree = 0;
    Wide edge_wiener = 0;
    Wide edge_hyper_wiener = 0;
    Polynomial polynomial;
};

/// Builds the report; index sums run in Acc (see edge_wiener).
template <typename Acc = Wide>
IndexReport analyze(Polynomial edge_hosoya_poly) {
    IndexReport report;
    report.edge_count = edge_hosoya_poly.constant_term();
    report.degree = edge_hosoya_poly.degree();
    report.edge_wiener = static_cast<Wide>(edge_wiener<Acc>(edge_hosoya_poly));
    report.edge_hyper_wiener = static_cast<Wide>(edge_hyper_wiener<Acc>(edge_hosoya_poly));
    report.polynomial = std::move(edge_hosoya_poly);
    return report;
}

}  // namespace ehp

#endif  // EHP_INDICES_HPP
