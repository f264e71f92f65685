#ifndef BITENSOR_RATIONAL_HPP
#define BITENSOR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bitensor {

// Exact scalars. mpq_class keeps values in lowest terms with a positive
// denominator after every arithmetic operation, but its two-argument
// constructor does not reduce; use ratio() for arbitrary fractions.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms; throws InvalidArgument when den is zero.
Rational ratio(long num, long den);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading '-'; q must be positive.
/// Throws InvalidArgument on anything else.
Rational parse_rational(std::string_view text);

}  // namespace bitensor

#endif  // BITENSOR_RATIONAL_HPP
