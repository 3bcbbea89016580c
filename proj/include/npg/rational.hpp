#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace npg {

/// Exact rational number. All combinatorial and interval-set arithmetic uses this.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in canonical form. Two-argument mpq_class constructors do not
/// reduce, and GMP arithmetic and comparison assume reduced operands.
Rational make_ratio(const Integer& num, const Integer& den);

/// Parses "p", "p/q" or "-p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Exact conversion of a finite double (every finite double is a dyadic rational).
Rational from_double(double value);

}  // namespace npg
