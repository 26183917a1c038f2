#include "ehp/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace ehp {

std::string to_decimal(Wide value) {
    if (value == 0) return "0";
    std::string digits;
    while (value != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<unsigned>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

// ---- Polynomial ----

Polynomial::Polynomial(std::initializer_list<std::uint64_t> coeffs) : coeffs_(coeffs) {
    trim();
}

Polynomial::Polynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::monomial(std::uint64_t coeff, std::size_t power) {
    if (coeff == 0) return Polynomial{};
    std::vector<std::uint64_t> c(power + 1, 0);
    c[power] = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : Polynomial{};
    std::vector<std::uint64_t> c(coeffs_.size() + k, 0);
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
    return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<std::uint64_t> c(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        c[k - 1] = checked::mul<std::uint64_t>(coeffs_[k], static_cast<std::uint64_t>(k));
    }
    return Polynomial(std::move(c));
}

std::uint64_t Polynomial::eval_at_one() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : coeffs_) sum = checked::add(sum, c);
    return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] = checked::add(coeffs_[k], rhs.coeffs_[k]);
    }
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial{};
    std::vector<std::uint64_t> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            c[i + j] = checked::add(c[i + j],
                                    checked::mul(lhs.coeffs_[i], rhs.coeffs_[j]));
        }
    }
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        std::uint64_t c = coeffs_[k];
        if (c == 0) continue;
        if (!first) out << " + ";
        if (k == 0) {
            out << c;
        } else {
            if (c != 1) out << c;
            out << "x";
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return first ? "0" : out.str();
}

// ---- SignedPolynomial ----

SignedPolynomial::SignedPolynomial(std::initializer_list<std::int64_t> coeffs)
    : coeffs_(coeffs) {
    trim();
}

SignedPolynomial::SignedPolynomial(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim();
}

SignedPolynomial SignedPolynomial::from(const Polynomial& p) {
    std::vector<std::int64_t> c(p.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (p.coeffs()[k] > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            throw OverflowError("coefficient too large for signed intermediate form");
        }
        c[k] = static_cast<std::int64_t>(p.coeffs()[k]);
    }
    return SignedPolynomial(std::move(c));
}

Polynomial SignedPolynomial::to_polynomial() const {
    std::vector<std::uint64_t> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] < 0) {
            throw std::domain_error("negative coefficient at x^" + std::to_string(k) +
                                    " in a polynomial exported as a distance count");
        }
        c[k] = static_cast<std::uint64_t>(coeffs_[k]);
    }
    return Polynomial(std::move(c));
}

void SignedPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

SignedPolynomial SignedPolynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : SignedPolynomial{};
    std::vector<std::int64_t> c(coeffs_.size() + k, 0);
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
    return SignedPolynomial(std::move(c));
}

SignedPolynomial& SignedPolynomial::operator+=(const SignedPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] = checked::add(coeffs_[k], rhs.coeffs_[k]);
    }
    trim();
    return *this;
}

SignedPolynomial& SignedPolynomial::operator-=(const SignedPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] = checked::sub(coeffs_[k], rhs.coeffs_[k]);
    }
    trim();
    return *this;
}

SignedPolynomial operator+(SignedPolynomial lhs, const SignedPolynomial& rhs) {
    lhs += rhs;
    return lhs;
}

SignedPolynomial operator-(SignedPolynomial lhs, const SignedPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

SignedPolynomial operator*(const SignedPolynomial& lhs, const SignedPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return SignedPolynomial{};
    std::vector<std::int64_t> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            c[i + j] = checked::add(c[i + j],
                                    checked::mul(lhs.coeffs_[i], rhs.coeffs_[j]));
        }
    }
    return SignedPolynomial(std::move(c));
}

std::string SignedPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1
                                  : static_cast<std::uint64_t>(c);
        if (k == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag;
            out << "x";
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return first ? "0" : out.str();
}

std::ostream& operator<<(std::ostream& out, const Polynomial& p) {
    return out << p.to_string();
}

std::ostream& operator<<(std::ostream& out, const SignedPolynomial& p) {
    return out << p.to_string();
}

SignedPolynomial divide_exact(const SignedPolynomial& numerator,
                              const SignedPolynomial& divisor) {
    if (divisor.is_zero()) {
        throw std::invalid_argument("divide_exact: divisor is zero");
    }
    std::int64_t lead = divisor.leading_coeff();
    if (lead != 1 && lead != -1) {
        throw std::invalid_argument("divide_exact: divisor leading coefficient must be +1 or -1");
    }
    if (numerator.is_zero()) return SignedPolynomial{};

    std::size_t dn = numerator.degree();
    std::size_t dd = divisor.degree();
    if (dn < dd) {
        throw ExactDivisionError("divide_exact: nonzero remainder (numerator degree below divisor)");
    }

    std::vector<std::int64_t> rem(numerator.coeffs());
    std::vector<std::int64_t> quot(dn - dd + 1, 0);
    for (std::size_t i = dn + 1; i-- > dd;) {
        std::int64_t c = lead == 1 ? rem[i] : checked::sub<std::int64_t>(0, rem[i]);
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] =
                checked::sub(rem[i - dd + j], checked::mul(c, divisor.coeff(j)));
        }
    }
    for (std::size_t k = 0; k < rem.size(); ++k) {
        if (rem[k] != 0) {
            throw ExactDivisionError("divide_exact: nonzero remainder at x^" + std::to_string(k));
        }
    }
    return SignedPolynomial(std::move(quot));
}

Polynomial divide_exact(const Polynomial& numerator, const Polynomial& divisor) {
    return divide_exact(SignedPolynomial::from(numerator), SignedPolynomial::from(divisor))
        .to_polynomial();
}

}  // namespace ehp
