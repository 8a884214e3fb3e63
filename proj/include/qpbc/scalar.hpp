#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpbc {

/// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0
/// after every arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses "7", "-3/4" or a decimal such as "-0.5" / "1e-3" into an exact
/// rational. Throws ParseError.
Scalar parseScalar(std::string_view text);

/// "p/q" in lowest terms, or "p" for integers.
std::string toString(const Scalar& value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// (-1)^e as an integer.
inline int signPower(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace qpbc
