#include "ehp/indices.hpp"

#include <stdexcept>

namespace ehp {

Polynomial to_hat(const Polynomial& p, std::uint64_t edge_count) {
    if (p.constant_term() != edge_count) {
        throw std::invalid_argument("to_hat: constant term does not equal the edge count");
    }
    // hat[0] = m + p[1] (self-pairs plus formerly-distance-1 pairs),
    // hat[k] = p[k+1] for k >= 1.
    std::vector<std::uint64_t> c(p.coeffs().size() > 1 ? p.coeffs().size() - 1 : 1, 0);
    c[0] = checked::add(edge_count, p.coeff(1));
    for (std::size_t k = 1; k + 1 < p.coeffs().size(); ++k) c[k] = p.coeffs()[k + 1];
    return Polynomial(std::move(c));
}

Polynomial from_hat(const Polynomial& hat, std::uint64_t edge_count) {
    if (hat.constant_term() < edge_count) {
        throw std::invalid_argument("from_hat: constant term below the edge count");
    }
    std::vector<std::uint64_t> c(hat.coeffs().size() + 2, 0);
    c[0] = edge_count;
    c[1] = hat.constant_term() - edge_count;
    for (std::size_t k = 1; k < hat.coeffs().size(); ++k) c[k + 1] = hat.coeffs()[k];
    return Polynomial(std::move(c));
}

}  // namespace ehp
