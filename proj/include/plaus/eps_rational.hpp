#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "plaus/big_rational.hpp"
#include "plaus/eps_polynomial.hpp"

namespace plaus {

/// Element of the ordered field Q(eps) of rational functions in one
/// positive infinitesimal eps.
///
/// Canonical form: num and den are coprime, both have integer
/// coefficients whose combined content is 1, and the lowest-order nonzero
/// coefficient of den is positive. Zero is 0/1. Two values are equal iff
/// their canonical forms are identical.
///
/// Order: a > 0 iff the lowest-order nonzero coefficient of the canonical
/// numerator is positive, i.e. iff a(t) > 0 for all sufficiently small
/// rational t > 0.
class EpsRational {
public:
    EpsRational() : num_(), den_(EpsPolynomial::constant(BigRational(1))) {}
    EpsRational(const BigRational& c);  // NOLINT: constants embed implicitly
    EpsRational(long c) : EpsRational(BigRational(c)) {}  // NOLINT

    /// Canonical representative of num/den. Throws division by zero for den = 0.
    static EpsRational normalize(EpsPolynomial num, EpsPolynomial den);
    static EpsRational eps();

    const EpsPolynomial& num() const noexcept { return num_; }
    const EpsPolynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    /// True when the value is not infinite (bounded by some rational).
    bool is_finite() const noexcept { return is_zero() || num_.valuation() >= den_.valuation(); }
    /// Both num and den are constants.
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// -1, 0 or +1.
    int sign() const noexcept { return num_.is_zero() ? 0 : plaus::sign(num_.lowest()); }

    /// Exact value at eps = t. Throws division by zero if den(t) = 0.
    BigRational eval(const BigRational& t) const;

    EpsRational operator-() const;
    EpsRational& operator+=(const EpsRational& b) { return *this = *this + b; }
    EpsRational& operator-=(const EpsRational& b) { return *this = *this - b; }
    EpsRational& operator*=(const EpsRational& b) { return *this = *this * b; }
    EpsRational& operator/=(const EpsRational& b) { return *this = *this / b; }

    friend EpsRational operator+(const EpsRational& a, const EpsRational& b);
    friend EpsRational operator-(const EpsRational& a, const EpsRational& b);
    friend EpsRational operator*(const EpsRational& a, const EpsRational& b);
    friend EpsRational operator/(const EpsRational& a, const EpsRational& b);

    friend bool operator==(const EpsRational& a, const EpsRational& b) = default;
    friend std::strong_ordering operator<=>(const EpsRational& a, const EpsRational& b);

private:
    EpsRational(EpsPolynomial num, EpsPolynomial den, bool) : num_(std::move(num)), den_(std::move(den)) {}

    EpsPolynomial num_;
    EpsPolynomial den_;
};

enum class Ordering { LT, EQ, GT };

Ordering compare(const EpsRational& a, const EpsRational& b);
const char* to_string(Ordering o);

/// Value at eps = 0. Throws Error(Errc::infinite) for infinite elements.
BigRational standard_part(const EpsRational& a);

/// Nonzero with zero standard part.
bool is_infinitesimal(const EpsRational& a);

/// Positive rational below which a - b keeps a constant sign: for every
/// rational t with 0 < t <= bound, a(t), b(t) are defined and
/// sign(a(t) - b(t)) equals the sign of compare(a, b).
BigRational sign_stable_bound(const EpsRational& a, const EpsRational& b);

EpsRational abs(const EpsRational& a);
EpsRational pow(const EpsRational& a, unsigned n);

/// Display form: ascending powers, e.g. "1/2 + eps" or "(1 + 2*eps)/(2 + eps)".
/// The output parses back to the identical value.
std::string to_string(const EpsRational& a);
std::string to_string(const EpsPolynomial& p);
std::ostream& operator<<(std::ostream& os, const EpsRational& a);

}  // namespace plaus
