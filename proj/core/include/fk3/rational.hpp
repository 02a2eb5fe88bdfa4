#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fk3 {

using Rational = mpq_class;

// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed text
// or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace fk3
