#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace matroot {

/// Exact signed rational. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

/// Parses "num/den" or "num".
Rational parse_rational(std::string_view text);

/// Formats as "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace matroot

namespace matroot {

/// Nearest binary64 to q (round-to-nearest-even).
double to_double(const Rational& q);

}  // namespace matroot
