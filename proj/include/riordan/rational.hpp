#ifndef RIORDAN_RATIONAL_HPP
#define RIORDAN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace riordan {

using Int = mpz_class;

// Exact rational, canonical form (lowest terms, positive denominator).
// All arithmetic goes through GMP's mpq layer, which preserves canonical form.
using Rational = mpq_class;

/// Canonicalized rational p/q. Throws on q == 0.
Rational rat(long num, long den = 1);
Rational rat(const Int& num, const Int& den);

/// Parses "p" or "p/q" with optional leading '-'. Throws on malformed input or q == 0.
Rational rat_from_string(const std::string& text);

/// "p" or "p/q", lowest terms.
std::string to_string(const Rational& value);

} // namespace riordan

#endif
