#ifndef MORIKIT_RATIONAL_HPP
#define MORIKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace morikit {

// All arithmetic in this library is exact. Integer/Rational are
// arbitrary-precision; fixed-width integers never appear on arithmetic paths.
using Integer = mpz_class;
using Rational = mpq_class;

/** n!, exact. */
Integer factorial(unsigned long n);

/**
 * Binomial coefficient binom(a, k) with the combinatorial convention:
 * zero whenever a < k (in particular for negative a).
 * Computed by a factorial-free product with exact stepwise division.
 */
Integer binomial(const Integer& a, unsigned long k);

/** base^e, exact. */
Integer int_pow(const Integer& base, unsigned long e);

/** Parses "p" or "p/q" (base 10, optional leading '-', q > 0). */
Rational parse_rational(const std::string& text);

/** Formats as "p/q", or "p" when the denominator is 1. */
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

} // namespace morikit

#endif
