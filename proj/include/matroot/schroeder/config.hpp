#pragma once

#include <span>

#include "matroot/densela/dense.hpp"

namespace matroot::schroeder {

struct SchroederConfig {
  int p = 2;
  int m = 1;
  /// Stop once ||R(X_k)|| <= tol; R is dimensionless.
  double tol = 1e-13;
  int max_iter = 60;
  NormKind norm = NormKind::inf;
  /// Abort when ||R(X_k)|| exceeds divergence_factor * ||R(X_0)||.
  double divergence_factor = 10.0;
  bool skip_precheck = false;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// b_0..b_m as binary64, rounded once from the exact rationals and cached per (p, m).
std::span<const double> taylor_coeffs_f64(int p, int m);

}  // namespace matroot::schroeder
