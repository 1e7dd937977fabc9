#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "plaus/big_rational.hpp"

namespace plaus {

/// Polynomial in the infinitesimal eps with exact rational coefficients.
/// coeffs()[i] is the coefficient of eps^i; the highest stored coefficient
/// is nonzero, and the zero polynomial has no coefficients.
class EpsPolynomial {
public:
    EpsPolynomial() = default;
    explicit EpsPolynomial(std::vector<BigRational> coeffs);

    static EpsPolynomial constant(const BigRational& c);
    static EpsPolynomial monomial(const BigRational& c, std::size_t power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Power of the lowest nonzero term. Zero polynomial: 0.
    std::size_t valuation() const noexcept;

    std::span<const BigRational> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of eps^i, zero past the degree.
    const BigRational& operator[](std::size_t i) const noexcept;
    const BigRational& leading() const noexcept { return coeffs_.back(); }
    /// Lowest-order nonzero coefficient; zero for the zero polynomial.
    const BigRational& lowest() const noexcept { return (*this)[valuation()]; }

    BigRational eval(const BigRational& x) const;
    /// Divides by eps^k; requires k <= valuation().
    EpsPolynomial shift_down(std::size_t k) const;
    /// Returns the polynomial divided by its leading coefficient.
    EpsPolynomial monic() const;

    EpsPolynomial operator-() const;
    friend EpsPolynomial operator+(const EpsPolynomial& a, const EpsPolynomial& b);
    friend EpsPolynomial operator-(const EpsPolynomial& a, const EpsPolynomial& b);
    friend EpsPolynomial operator*(const EpsPolynomial& a, const EpsPolynomial& b);
    friend EpsPolynomial operator*(const EpsPolynomial& a, const BigRational& c);
    friend bool operator==(const EpsPolynomial& a, const EpsPolynomial& b) = default;

    /// Euclidean division, b != 0.
    static std::pair<EpsPolynomial, EpsPolynomial> divmod(const EpsPolynomial& a, const EpsPolynomial& b);

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
EpsPolynomial gcd(const EpsPolynomial& a, const EpsPolynomial& b);

/// Exact quotient a / b, which must leave no remainder.
EpsPolynomial exact_quotient(const EpsPolynomial& a, const EpsPolynomial& b);

/// A positive rational r such that every nonzero complex root z of p
/// satisfies |z| > r (Cauchy bound applied to the reciprocal polynomial).
/// For p without nonzero roots the result is 1.
BigRational root_free_radius(const EpsPolynomial& p);

}  // namespace plaus
