#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace discknot {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational in lowest terms with positive denominator; zero is 0/1.
/// GMP keeps mpq values canonical after every arithmetic operation.
using Rat = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error if den == 0.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& r);

/// Converts a non-negative integral value to long; throws if not integral.
long to_long(const Rat& r);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace discknot
