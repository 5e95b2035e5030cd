#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace realclass {

// mpq_class keeps every arithmetic result canonical (lowest terms, positive
// denominator); values built from a numerator/denominator pair must go
// through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace realclass
