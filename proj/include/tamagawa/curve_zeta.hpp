#pragma once

#include <string>
#include <vector>

#include "tamagawa/exact.hpp"

namespace tamagawa {

/// Zeta function of a smooth projective curve over F_q, stored as its
/// L-polynomial P(T) = sum_i a_i T^i = prod_i (1 - alpha_i T), deg P = 2g.
///
/// Construction validates: a_0 = 1, the functional equation
/// a_{2g-i} = q^{g-i} a_i, |alpha_i| = q^{1/2} numerically (1e-9), and
/// N_m >= 0, b_m >= 0 for m <= 30. The last screen is a necessary condition
/// only; it does not prove that a curve with this zeta function exists.
class CurveZeta {
 public:
  static constexpr int kScreenDepth = 30;
  static constexpr double kWeilTolerance = 1e-9;

  static CurveZeta projective_line(const BigInt& q);
  static CurveZeta from_l_coeffs(const BigInt& q, std::vector<BigInt> l_coeffs);
  /// Inverts N_m = q^m + 1 - s_m for m = 1..g through Newton's identities.
  static CurveZeta from_point_counts(const BigInt& q, int genus, const std::vector<BigInt>& counts);

  const BigInt& q() const { return q_; }
  int genus() const { return genus_; }
  const std::vector<BigInt>& l_coeffs() const { return coeffs_; }

  /// s_1..s_max, power sums of the Frobenius eigenvalues alpha_i.
  std::vector<BigInt> power_sums(int max) const;
  /// N_m = #X(F_{q^m}).
  BigInt point_count(int m) const;
  /// b_m = number of closed points of degree m, by Mobius inversion.
  BigInt closed_points(int m) const;
  /// P(q^{-n}) / ((1 - q^{-n})(1 - q^{1-n})) = Z(X, n); requires n >= 2.
  Rational zeta_special_value(int n) const;
  /// Curve over F_{q^m} whose eigenvalues are alpha_i^m.
  CurveZeta base_change(int m) const;

  std::string summary() const;  // "g=1 over F_2, P(T)=[1,2,2]"

  friend bool operator==(const CurveZeta&, const CurveZeta&) = default;

 private:
  CurveZeta(BigInt q, int genus, std::vector<BigInt> coeffs)
      : q_(std::move(q)), genus_(genus), coeffs_(std::move(coeffs)) {}

  void validate() const;
  void check_functional_equation() const;
  void check_weil_bound() const;

  BigInt q_;
  int genus_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Mobius function.
int mobius(int n);

}  // namespace tamagawa
