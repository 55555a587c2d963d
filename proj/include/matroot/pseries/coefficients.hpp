#pragma once

#include <cstddef>
#include <vector>

#include "matroot/pseries/series.hpp"

namespace matroot::pseries {

/// x (x+1) ... (x+i-1); equal to 1 when i == 0.
Rational rising_factorial(const Rational& x, std::size_t i);

/// Coefficients b_0..b_N of (1-t)^{1/p}: b_0 = 1, b_i = (-1/p)_i / i!.
/// Throws std::invalid_argument for p < 2.
TruncatedSeries binomial_coeffs(int p, std::size_t order);

/// Partial sums s_1..s_{N+1}, s_k = b_0 + ... + b_{k-1}. Element j holds s_{j+1}.
std::vector<Rational> tail_sums(const TruncatedSeries& b);

/// s_k through the product form prod_{j=1}^{k-1} (1 - 1/(p j)), exact.
Rational tail_sum_product(int p, std::size_t k);

/// The degree-m truncation T_m of the binomial series, held at order N.
TruncatedSeries taylor_polynomial(int p, int m, std::size_t order);

/// a_0..a_N with (T_m(t))^{-p} = sum a_i t^i, by direct series inversion.
TruncatedSeries a_coeffs_direct(int p, int m, std::size_t order);

/// a_0..a_N from the order-m linear recursion seeded with a_0 = ... = a_{m-1} = 1.
TruncatedSeries a_coeffs_recursive(int p, int m, std::size_t order);

/// c_i of f(t) = 1 - (T_m(t))^{-p}(1-t): c_0 = 0, c_i = a_{i-1} - a_i.
TruncatedSeries f_coeffs(int p, int m, std::size_t order);

/// d_i of g(t) = T_m(t) f(t): d_i = sum_{j=0}^{min(m,i)} b_j c_{i-j}.
TruncatedSeries g_coeffs(int p, int m, std::size_t order);

/// First iterate of the [1/0] dual Pade iteration, 1/(1 + z/p) = sum (-1)^i p^{-i} z^i.
TruncatedSeries pade10_first_iterate(int p, std::size_t order);

void require_valid_pm(int p, int m);

}  // namespace matroot::pseries
