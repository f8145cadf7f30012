#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tamagawa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(const BigInt& base, std::uint64_t exponent);

/// base^exponent for any integer exponent; base must be nonzero when
/// exponent < 0.
Rational rpow(const Rational& base, std::int64_t exponent);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Decimal rendering with a fixed number of significant digits.
std::string to_decimal(double value, int significant_digits = 12);
std::string to_decimal(const Rational& value, int significant_digits = 12);

double to_double(const Rational& value);
double to_double(const BigInt& value);

/// Natural log of a positive rational, accurate even when numerator and
/// denominator overflow a double.
double log_of(const Rational& value);

/// True when q = p^k for a prime p and k >= 1.
bool is_prime_power(const BigInt& q);
bool is_prime(std::uint64_t n);

}  // namespace tamagawa
