#ifndef EHP_POLY_HPP
#define EHP_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehp {

/// 128-bit accumulator for Wiener-type index values, which outgrow 64 bits
/// long before the polynomial coefficients do.
using Wide = unsigned __int128;

std::string to_decimal(Wide value);

/// Thrown when a checked integer operation would wrap.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by divide_exact when the division leaves a nonzero remainder.
/// A nonzero remainder means the numerator was not a true multiple of the
/// divisor, i.e. a closed-form transcription is wrong.
struct ExactDivisionError : std::runtime_error {
    explicit ExactDivisionError(const std::string& what) : std::runtime_error(what) {}
};

namespace checked {

template <typename T>
inline T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

template <typename T>
inline T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

template <typename T>
inline T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

}  // namespace checked

/// Dense univariate polynomial with non-negative exact integer coefficients.
/// coeff(k) multiplies x^k. Trailing zeros are trimmed; the zero polynomial
/// stores no coefficients. All arithmetic is overflow-checked: an operation
/// that would wrap throws OverflowError instead of corrupting a count.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<std::uint64_t> coeffs);
    explicit Polynomial(std::vector<std::uint64_t> coeffs);

    static Polynomial monomial(std::uint64_t coeff, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    std::uint64_t coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
    std::uint64_t constant_term() const { return coeff(0); }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    /// Multiplication by x^k (index shift).
    Polynomial shifted(std::size_t k) const;
    /// Formal derivative.
    Polynomial derivative() const;
    /// Sum of coefficients.
    std::uint64_t eval_at_one() const;

    Polynomial& operator+=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    bool operator==(const Polynomial&) const = default;

    /// Ascending powers with explicit separators, e.g. "6 + 6x + 6x^2 + 3x^3".
    std::string to_string() const;

private:
    std::vector<std::uint64_t> coeffs_;
    void trim();
};

/// Signed companion to Polynomial, used where intermediate values may dip
/// below zero: closed-form numerators and the long division that reduces
/// them. Anything exported as a distance count goes back through
/// to_polynomial(), which rejects negative coefficients.
class SignedPolynomial {
public:
    SignedPolynomial() = default;
    SignedPolynomial(std::initializer_list<std::int64_t> coeffs);
    explicit SignedPolynomial(std::vector<std::int64_t> coeffs);

    static SignedPolynomial from(const Polynomial& p);
    Polynomial to_polynomial() const;

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    std::int64_t coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
    std::int64_t leading_coeff() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    SignedPolynomial shifted(std::size_t k) const;

    SignedPolynomial& operator+=(const SignedPolynomial& rhs);
    SignedPolynomial& operator-=(const SignedPolynomial& rhs);
    friend SignedPolynomial operator+(SignedPolynomial lhs, const SignedPolynomial& rhs);
    friend SignedPolynomial operator-(SignedPolynomial lhs, const SignedPolynomial& rhs);
    friend SignedPolynomial operator*(const SignedPolynomial& lhs, const SignedPolynomial& rhs);
    bool operator==(const SignedPolynomial&) const = default;

    std::string to_string() const;

private:
    std::vector<std::int64_t> coeffs_;
    void trim();
};

std::ostream& operator<<(std::ostream& out, const Polynomial& p);
std::ostream& operator<<(std::ostream& out, const SignedPolynomial& p);

/// Exact long division. The divisor must be nonzero with leading coefficient
/// +1 or -1; a nonzero remainder throws ExactDivisionError.
SignedPolynomial divide_exact(const SignedPolynomial& numerator,
                              const SignedPolynomial& divisor);

/// Convenience overload for inputs already known to be non-negative.
Polynomial divide_exact(const Polynomial& numerator, const Polynomial& divisor);

}  // namespace ehp

#endif  // EHP_POLY_HPP
