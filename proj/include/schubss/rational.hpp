#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace schubss {

/// Arbitrary-precision exact rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0, gcd(p, q) = 1.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading sign); throws UsageError on bad input.
Rational parse_rational(std::string_view text);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace schubss
