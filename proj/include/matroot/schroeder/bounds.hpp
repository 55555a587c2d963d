#pragma once

#include <cstdint>
#include <vector>

namespace matroot::schroeder {

/// Largest index for which tail sums are taken from the exact rationals.
inline constexpr std::uint64_t kExactTailSumLimit = 1024;

/// s_k = b_0 + ... + b_{k-1} rounded to binary64 (k >= 1). Exact up to
/// kExactTailSumLimit; past it the product form prod_{j<k} (1 - 1/(p j)) is
/// evaluated in binary64, and past 2^20 the value at 2^20 is returned, which
/// still bounds s_k from above because the sums decrease.
double tail_sum(int p, std::uint64_t k);

/// b_0..b_{count-1} in binary64 through b_i = -s_i / (p i).
std::vector<double> binomial_coeffs_f64(int p, std::size_t count);

struct AprioriBounds {
  double plain = 0.0;  ///< ||B||^{(m+1)^k}
  double sharp = 0.0;  ///< s_{(m+1)^k} ||B||^{(m+1)^k}
};

/// Error bounds for X_k given ||B|| < 1 in a submultiplicative norm.
/// Throws std::invalid_argument unless 0 <= normB < 1.
AprioriBounds apriori_bounds(double normB, int p, int m, int k);

}  // namespace matroot::schroeder
