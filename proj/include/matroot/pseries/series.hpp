#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "matroot/rational.hpp"

namespace matroot::pseries {

/// Formal power series c_0 + c_1 z + ... + c_N z^N over the rationals,
/// truncated at a fixed order N. Every arithmetic result is exact up to z^N;
/// combining series of different orders is an error.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Takes ownership of the coefficients; order = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  TruncatedSeries(std::initializer_list<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  /// c * z^power, or the zero series if power > order.
  static TruncatedSeries monomial(const Rational& c, std::size_t power, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::size_t size() const { return coeffs_.size(); }

  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }

  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Copy re-truncated to a smaller (or equal) order.
  TruncatedSeries truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Throws std::invalid_argument unless both series share the same order.
void require_same_order(const TruncatedSeries& u, const TruncatedSeries& v);

TruncatedSeries operator+(const TruncatedSeries& u, const TruncatedSeries& v);
TruncatedSeries operator-(const TruncatedSeries& u, const TruncatedSeries& v);
TruncatedSeries operator-(const TruncatedSeries& u);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& u);

/// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& u, const TruncatedSeries& v);
inline TruncatedSeries operator*(const TruncatedSeries& u, const TruncatedSeries& v) {
  return series_mul(u, v);
}

/// 1/u via w_0 = 1/u_0, w_i = -(1/u_0) sum_{j=1..i} u_j w_{i-j}.
/// Throws std::domain_error when u_0 == 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& u);

/// u^e by binary exponentiation; negative e goes through series_reciprocal.
TruncatedSeries series_int_pow(const TruncatedSeries& u, long e);

/// sum_j poly[j] * u^j by Horner's rule (poly.size() - 1 multiplications).
TruncatedSeries series_horner(std::span<const Rational> poly, const TruncatedSeries& u);

}  // namespace matroot::pseries
