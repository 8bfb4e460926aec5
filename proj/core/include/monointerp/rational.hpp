#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace monointerp {

/// Exact rational arithmetic. Values are always kept canonical.
using Rational = mpq_class;

/// numerator/denominator in lowest terms. Throws std::invalid_argument on a zero denominator.
Rational make_rational(long numerator, long denominator = 1);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Inverse of to_string. Also accepts surrounding whitespace.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

double to_double(const Rational& value);

} // namespace monointerp
