#pragma once

#include <cstdint>

#include "tamagawa/exact.hpp"
#include "tamagawa/root_datum.hpp"

namespace tamagawa {

/// |G(F_q)| = q^N * prod_i (q^{d_i} - 1), N the number of positive roots.
/// Depends only on the degrees, hence is the same for every isogeny class.
BigInt steinberg_count(const InvariantDegrees& degrees, int num_positive, const BigInt& q);
BigInt steinberg_count(const RootDatum& datum, const BigInt& q);

/// det(1 - q^{-n} F) for an integer matrix F of finite order (the Euler
/// factor of an Artin L-function at a point where Frobenius acts by F).
/// Throws InvalidInput when F^k != 1 for all k <= order_bound.
Rational twisted_euler_factor(const IntMatrix& frobenius, const BigInt& q, int n,
                              int order_bound = 1024);

/// Smallest k >= 1 with F^k = 1, or 0 if none up to the bound (or the
/// entries grow past 64 bits, which rules out finite order).
int matrix_order(const IntMatrix& frobenius, int bound);

enum class MatrixFamily { SL, PGL };

enum class Backend { serial, parallel };

/// Exhaustive count over all n x n matrices with entries in F_q:
/// SL counts determinant 1, PGL counts invertible matrices divided by q - 1.
/// Only n in {2, 3} and prime q <= 5 are accepted (at most 5^9 matrices);
/// anything larger raises ResourceLimit.
BigInt brute_force_group_order(MatrixFamily family, int n, int q,
                               Backend backend = Backend::parallel);

}  // namespace tamagawa
