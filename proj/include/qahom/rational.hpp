#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qahom {

// Exact rationals; GMP keeps every value in lowest terms with a positive
// denominator after each arithmetic operation.
using Rational = mpq_class;

// Serializes as "p/q", always with an explicit denominator.
std::string to_string(const Rational& value);

// Accepts "p/q" or "p" with an optional leading sign. Throws
// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace qahom
