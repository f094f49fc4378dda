#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace thomcalc {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Canonical rational with the given numerator and denominator.
Rational make_rational(long num, long den = 1);

// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// "n" for integers, "n/d" otherwise, always in lowest terms.
std::string to_string(const Rational& q);

// q^e for integer e; throws ZeroDenominator for 0^negative.
Rational pow(const Rational& q, int e);

}  // namespace thomcalc
