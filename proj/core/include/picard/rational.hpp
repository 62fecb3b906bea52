#pragma once

#include <gmpxx.h>

#include <string>

namespace picard {

/// Arbitrary-precision rational number.  All coefficient arithmetic in this
/// library is exact; there is no floating point anywhere.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

}  // namespace picard
