#pragma once

#include <cstddef>
#include <vector>

#include "matroot/pseries/series.hpp"

namespace matroot::pseries {

/// Rows c_{k,.} of the Schroeder iterates x_k(z) for a = 1 - z, k = 0..k_max.
struct CoeffTable {
  int p = 2;
  int m = 1;
  std::size_t order = 0;
  std::vector<TruncatedSeries> rows;

  const TruncatedSeries& row(std::size_t k) const { return rows.at(k); }
  std::size_t k_max() const { return rows.size() - 1; }
};

/// R(x) = 1 - (1 - z) x^{-p}. Requires x_0 == 1.
TruncatedSeries residual_series(const TruncatedSeries& x, int p);

/// x R(x).
TruncatedSeries xr_series(const TruncatedSeries& x, int p);

/// One Schroeder step x T_m(R(x)), with T_m applied by Horner's rule.
TruncatedSeries schroeder_step_series(const TruncatedSeries& x, int p, int m);

/// Iterates from x_0 = 1 up to row k_max at truncation order N.
CoeffTable schroeder_coeff_table(int p, int m, std::size_t k_max, std::size_t order);

}  // namespace matroot::pseries
