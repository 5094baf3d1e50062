#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace bcinterp {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Parses "p" or "p/q" (optional sign, q > 0 after canonicalization).
// Always canonicalizes; throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(const std::string& text);

// Canonical display form: "p" when the denominator is 1, else "p/q".
// Round-trips exactly through parse_rational.
std::string to_string(const Rational& value);

// value^e with e any integer; e < 0 requires value != 0.
Rational rat_pow(const Rational& value, long e);

Rational rat_abs(const Rational& value);

}  // namespace bcinterp
