#pragma once

#include <gmpxx.h>

#include <string>

namespace finv {

// All measures are exact rationals; floating point enters only through the
// logarithms in the entropy layer.
using Rational = mpq_class;

// Parses "p/q" or "p" (optional leading '-').  Throws ValidationError on
// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rational_str(const Rational& q);

double to_double(const Rational& q);

}  // namespace finv
