#include "tamagawa/curve_zeta.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "tamagawa/errors.hpp"

namespace tamagawa {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero).
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return {quot, a};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Elementary symmetric functions from power sums: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} s_i.
std::vector<BigInt> elementary_from_power_sums(const std::vector<BigInt>& s, int count) {
  std::vector<BigInt> e(count + 1);
  e[0] = 1;
  for (int k = 1; k <= count; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) {
      const BigInt term = e[k - i] * s[i - 1];
      acc += (i % 2 == 1) ? term : BigInt(-term);
    }
    if (acc % k != 0) {
      throw InvalidInput("invalid curve: power sums do not come from an integral L-polynomial");
    }
    e[k] = acc / k;
  }
  return e;
}

}  // namespace

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

CurveZeta CurveZeta::projective_line(const BigInt& q) { return from_l_coeffs(q, {BigInt(1)}); }

CurveZeta CurveZeta::from_l_coeffs(const BigInt& q, std::vector<BigInt> l_coeffs) {
  if (!is_prime_power(q)) throw InvalidInput("invalid curve: q=" + q.str() + " is not a prime power");
  if (l_coeffs.empty() || l_coeffs.size() % 2 == 0) {
    throw InvalidInput("invalid curve: L-polynomial must have odd length 2g+1");
  }
  const int genus = static_cast<int>(l_coeffs.size() - 1) / 2;
  CurveZeta curve(q, genus, std::move(l_coeffs));
  curve.validate();
  return curve;
}

CurveZeta CurveZeta::from_point_counts(const BigInt& q, int genus, const std::vector<BigInt>& counts) {
  if (!is_prime_power(q)) throw InvalidInput("invalid curve: q=" + q.str() + " is not a prime power");
  if (genus < 0) throw InvalidInput("invalid curve: negative genus");
  if (static_cast<int>(counts.size()) != genus) {
    throw InvalidInput("invalid curve: expected " + std::to_string(genus) + " point counts, got " +
                       std::to_string(counts.size()));
  }
  std::vector<BigInt> s;
  for (int m = 1; m <= genus; ++m) {
    if (counts[m - 1] < 0) throw InvalidInput("invalid curve: negative point count");
    s.push_back(ipow(q, m) + 1 - counts[m - 1]);
  }
  const auto e = elementary_from_power_sums(s, genus);
  std::vector<BigInt> a(2 * genus + 1);
  for (int i = 0; i <= genus; ++i) a[i] = (i % 2 == 0) ? e[i] : BigInt(-e[i]);
  for (int i = 0; i < genus; ++i) a[2 * genus - i] = ipow(q, genus - i) * a[i];
  CurveZeta curve(q, genus, std::move(a));
  curve.validate();
  return curve;
}

std::vector<BigInt> CurveZeta::power_sums(int max) const {
  // Newton: s_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i s_{k-i} + (-1)^{k-1} k e_k,
  // with e_i = (-1)^i a_i and e_i = 0 for i > 2g.
  const int top = 2 * genus_;
  auto e = [&](int i) -> BigInt {
    if (i > top) return 0;
    return (i % 2 == 0) ? coeffs_[i] : BigInt(-coeffs_[i]);
  };
  std::vector<BigInt> s(max + 1, 0);
  for (int k = 1; k <= max; ++k) {
    BigInt acc = 0;
    for (int i = 1; i < k && i <= top; ++i) {
      const BigInt term = e(i) * s[k - i];
      acc += (i % 2 == 1) ? term : BigInt(-term);
    }
    if (k <= top) {
      const BigInt last = k * e(k);
      acc += (k % 2 == 1) ? last : BigInt(-last);
    }
    s[k] = acc;
  }
  s.erase(s.begin());
  return s;
}

BigInt CurveZeta::point_count(int m) const {
  if (m < 1) throw InvalidInput("point count index must be positive");
  return ipow(q_, m) + 1 - power_sums(m).back();
}

BigInt CurveZeta::closed_points(int m) const {
  if (m < 1) throw InvalidInput("closed point degree must be positive");
  const auto s = power_sums(m);
  BigInt acc = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const int mu = mobius(m / d);
    if (mu == 0) continue;
    const BigInt n_d = ipow(q_, d) + 1 - s[d - 1];
    acc += mu * n_d;
  }
  if (acc % m != 0 || acc < 0) {
    throw InvalidInput("invalid curve: closed point count b_" + std::to_string(m) + " = " +
                       acc.str() + "/" + std::to_string(m));
  }
  return acc / m;
}

Rational CurveZeta::zeta_special_value(int n) const {
  if (n <= 1) throw InvalidInput("zeta function has a pole or no Euler product at s=" + std::to_string(n));
  const Rational x = rpow(Rational(q_), -n);
  Rational p = 0;
  Rational xi = 1;
  for (const auto& a : coeffs_) {
    p += a * xi;
    xi *= x;
  }
  return p / ((1 - x) * (1 - q_ * x));
}

CurveZeta CurveZeta::base_change(int m) const {
  if (m < 1) throw InvalidInput("base change degree must be positive");
  if (m == 1) return *this;
  const int top = 2 * genus_;
  const auto s = power_sums(m * top);
  std::vector<BigInt> s_new;
  for (int j = 1; j <= top; ++j) s_new.push_back(s[m * j - 1]);
  const auto e = elementary_from_power_sums(s_new, top);
  std::vector<BigInt> a(top + 1);
  for (int i = 0; i <= top; ++i) a[i] = (i % 2 == 0) ? e[i] : BigInt(-e[i]);
  CurveZeta curve(ipow(q_, m), genus_, std::move(a));
  curve.validate();
  return curve;
}

std::string CurveZeta::summary() const {
  std::string s = "g=" + std::to_string(genus_) + " over F_" + q_.str() + ", P(T)=[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += coeffs_[i].str();
  }
  return s + "]";
}

void CurveZeta::validate() const {
  if (static_cast<int>(coeffs_.size()) != 2 * genus_ + 1) {
    throw InvalidInput("invalid curve: L-polynomial has wrong degree");
  }
  if (coeffs_[0] != 1) throw InvalidInput("invalid curve: L-polynomial must have constant term 1");
  check_functional_equation();
  check_weil_bound();

  const auto s = power_sums(kScreenDepth);
  std::vector<BigInt> n(kScreenDepth + 1);
  for (int m = 1; m <= kScreenDepth; ++m) {
    n[m] = ipow(q_, m) + 1 - s[m - 1];
    if (n[m] < 0) {
      throw InvalidInput("invalid curve: N_" + std::to_string(m) + " = " + n[m].str() + " < 0");
    }
  }
  for (int m = 1; m <= kScreenDepth; ++m) {
    BigInt acc = 0;
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) acc += mobius(m / d) * n[d];
    }
    if (acc < 0 || acc % m != 0) {
      throw InvalidInput("invalid curve: b_" + std::to_string(m) + " = " + acc.str() + "/" +
                         std::to_string(m) + " is not a non-negative integer");
    }
  }
}

void CurveZeta::check_functional_equation() const {
  const int top = 2 * genus_;
  for (int i = 0; i <= genus_; ++i) {
    if (coeffs_[top - i] != ipow(q_, genus_ - i) * coeffs_[i]) {
      throw InvalidInput("invalid curve: functional equation a_" + std::to_string(top - i) +
                         " = q^" + std::to_string(genus_ - i) + " a_" + std::to_string(i) + " fails");
    }
  }
}

void CurveZeta::check_weil_bound() const {
  if (genus_ == 0) return;

  // Repeated roots (common after base change) make eigenvalues of the
  // companion matrix inaccurate, so work with the exact squarefree part.
  RatPoly p(coeffs_.begin(), coeffs_.end());
  RatPoly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<int>(i));
  const RatPoly g = gcd(p, dp);
  const RatPoly sqfree = divmod(p, g).first;
  const int deg = static_cast<int>(sqfree.size()) - 1;
  if (deg < 1) return;

  // Substitute T = u / sqrt(q): roots of P lie on |T| = q^{-1/2} exactly
  // when the rescaled roots lie on the unit circle.
  using LD = long double;
  const LD root_q = std::sqrt(static_cast<LD>(q_.convert_to<long double>()));
  std::vector<LD> c(deg + 1);
  LD scale = 1;
  for (int i = 0; i <= deg; ++i) {
    c[i] = sqfree[i].convert_to<long double>() / scale;
    scale *= root_q;
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 0; i < deg; ++i) {
    companion(i, deg - 1) = static_cast<double>(-c[i] / c[deg]);
    if (i + 1 < deg) companion(i + 1, i) = 1.0;
  }
  const Eigen::VectorXcd roots = companion.eigenvalues();

  for (int k = 0; k < deg; ++k) {
    std::complex<LD> z(roots[k].real(), roots[k].imag());
    for (int it = 0; it < 50; ++it) {
      std::complex<LD> val = 0, der = 0;
      for (int i = deg; i >= 0; --i) {
        der = der * z + val;
        val = val * z + c[i];
      }
      if (std::abs(der) == 0) break;
      const auto step = val / der;
      z -= step;
      if (std::abs(step) < 1e-19L) break;
    }
    const LD modulus = std::abs(z);
    if (std::abs(modulus - 1) > static_cast<LD>(kWeilTolerance)) {
      throw InvalidInput("invalid curve: L-polynomial root of modulus " +
                         std::to_string(static_cast<double>(modulus / root_q)) +
                         " violates the Weil bound |root| = q^{-1/2}");
    }
  }
}

}  // namespace tamagawa
