#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plaus {

/// Arbitrary precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const BigRational& q);

/// Parses "p" or "p/q" (optional leading '-'). Throws Error(Errc::parse)
/// on malformed text and Error(Errc::division_by_zero) for q = 0.
BigRational parse_rational(std::string_view text);

inline int sign(const BigRational& q) { return sgn(q); }

}  // namespace plaus
