#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace diskpack {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// "p/q" (or "p" when q = 1).
std::string to_fraction_string(const Rational& x);

/// Parses "p/q" or an integer string; InputError on malformed text.
Rational parse_fraction(const std::string& s);

/// Decimal rendering with `digits` significant digits, rounded toward zero.
std::string to_decimal_string(const Rational& x, int digits = 40);

double to_double(const Rational& x);

/// floor(x * 2^bits) / 2^bits and the matching ceiling.
Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);

}  // namespace diskpack
