#include "tamagawa/exact.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

namespace tamagawa {

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Rational rpow(const Rational& base, std::int64_t exponent) {
  if (exponent >= 0) {
    return Rational(ipow(numerator(base), static_cast<std::uint64_t>(exponent)),
                    ipow(denominator(base), static_cast<std::uint64_t>(exponent)));
  }
  const auto e = static_cast<std::uint64_t>(-exponent);
  return Rational(ipow(denominator(base), e), ipow(numerator(base), e));
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_decimal(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return buf;
}

std::string to_decimal(const Rational& value, int significant_digits) {
  return to_decimal(to_double(value), significant_digits);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

double to_double(const BigInt& value) { return value.convert_to<double>(); }

namespace {

double log_positive(const BigInt& x) {
  const std::size_t bits = msb(x);
  const std::size_t shift = bits > 60 ? bits - 60 : 0;
  const BigInt head = x >> shift;
  return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace

double log_of(const Rational& value) {
  return log_positive(numerator(value)) - log_positive(denominator(value));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % p == 0) return n == p;
  }
  std::mt19937_64 gen(0x5eed);
  return boost::multiprecision::miller_rabin_test(BigInt(n), 25, gen);
}

bool is_prime_power(const BigInt& q) {
  if (q < 2) return false;
  constexpr unsigned kTrialLimit = 1'000'000;
  for (unsigned p = 2; p <= kTrialLimit && BigInt(p) * p <= q; ++p) {
    if (q % p != 0) continue;
    BigInt rest = q;
    while (rest % p == 0) rest /= p;
    return rest == 1;
  }
  // No factor below the trial limit: q is a prime power only as r^k with a
  // large prime r.
  std::mt19937_64 gen(0x5eed);
  const std::size_t bits = msb(q) + 1;
  for (std::size_t k = 1; k <= bits; ++k) {
    // integer k-th root by bisection
    BigInt lo = 1;
    BigInt hi = BigInt(1) << (bits / k + 1);
    while (lo < hi) {
      BigInt mid = (lo + hi + 1) / 2;
      if (ipow(mid, k) <= q) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    if (lo < 2) break;
    if (ipow(lo, k) == q) {
      return boost::multiprecision::miller_rabin_test(lo, 25, gen);
    }
  }
  return false;
}

}  // namespace tamagawa
