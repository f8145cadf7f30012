#include "tamagawa/finite_groups.hpp"

#include <numeric>

#include "tamagawa/errors.hpp"
#include "tamagawa/kernels/enumeration.hpp"

namespace tamagawa {

BigInt steinberg_count(const InvariantDegrees& degrees, int num_positive, const BigInt& q) {
  if (q < 2) throw InvalidInput("field size must be at least 2");
  BigInt count = ipow(q, static_cast<std::uint64_t>(num_positive));
  for (int d : degrees.degrees) count *= ipow(q, static_cast<std::uint64_t>(d)) - 1;
  return count;
}

BigInt steinberg_count(const RootDatum& datum, const BigInt& q) {
  return steinberg_count(datum.degrees, datum.num_positive(), q);
}

int matrix_order(const IntMatrix& f, int bound) {
  const std::size_t n = f.size();
  IntMatrix power = f;
  auto is_identity = [n](const IntMatrix& m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m[i][j] != (i == j ? 1 : 0)) return false;
      }
    }
    return true;
  };
  for (int k = 1; k <= bound; ++k) {
    if (is_identity(power)) return k;
    IntMatrix next(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (std::size_t l = 0; l < n; ++l) {
          std::int64_t prod = 0;
          if (__builtin_mul_overflow(power[i][l], f[l][j], &prod) ||
              __builtin_add_overflow(acc, prod, &acc)) {
            return 0;
          }
        }
        next[i][j] = acc;
      }
    }
    power = std::move(next);
  }
  return 0;
}

Rational twisted_euler_factor(const IntMatrix& frobenius, const BigInt& q, int n,
                              int order_bound) {
  const std::size_t dim = frobenius.size();
  if (dim == 0) throw InvalidInput("Frobenius matrix is empty");
  for (const auto& row : frobenius) {
    if (row.size() != dim) throw InvalidInput("Frobenius matrix is not square");
  }
  if (q < 2) throw InvalidInput("field size must be at least 2");
  if (n < 2) throw InvalidInput("Euler factor degree n must be at least 2");
  if (matrix_order(frobenius, order_bound) == 0) {
    throw InvalidInput("Frobenius matrix has no finite order up to " + std::to_string(order_bound));
  }

  const Rational scale = rpow(Rational(q), -n);
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      m[i][j] = (i == j ? Rational(1) : Rational(0)) - scale * frobenius[i][j];
    }
  }
  Rational det = 1;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t pivot = c;
    while (pivot < dim && m[pivot][c] == 0) ++pivot;
    if (pivot == dim) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < dim; ++i) {
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < dim; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

BigInt brute_force_group_order(MatrixFamily family, int n, int q, Backend backend) {
  if (n < 2 || n > 3 || q < 2 || q > 5) {
    throw ResourceLimit("brute-force enumeration limited to n in {2,3} and q <= 5 (got n=" +
                        std::to_string(n) + ", q=" + std::to_string(q) + ")");
  }
  if (!is_prime(static_cast<std::uint64_t>(q))) {
    throw InvalidInput("brute-force enumeration needs a prime field, got q=" + std::to_string(q));
  }
  const auto p = static_cast<std::uint32_t>(q);
  const auto hist = backend == Backend::serial ? kernels::determinant_histogram_serial(n, p)
                                               : kernels::determinant_histogram_parallel(n, p);
  if (family == MatrixFamily::SL) return BigInt(hist[1]);

  const std::uint64_t invertible = std::accumulate(hist.begin() + 1, hist.end(), std::uint64_t{0});
  // scalars act freely on GL_n, so every class has exactly q - 1 elements
  if (invertible % (p - 1) != 0) {
    throw InvariantViolation("|GL_n(F_q)| not divisible by q - 1");
  }
  return BigInt(invertible / (p - 1));
}

}  // namespace tamagawa
