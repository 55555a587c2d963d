#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "matroot/pseries/coefficients.hpp"
#include "matroot/schroeder/config.hpp"
#include "matroot/schroeder/report.hpp"

namespace matroot::schroeder {

template <typename T>
struct ScalarStep {
  int k = 0;
  T x{};
  T residual{};
};

template <typename T>
struct ScalarRunResult {
  T x{};
  std::vector<ScalarStep<T>> steps;
  Termination termination = Termination::max_iter;
};

namespace detail {

template <typename T>
std::vector<T> taylor_coeffs_as(int p, int m) {
  std::vector<T> out;
  if constexpr (std::is_same_v<T, double> || is_complex_v<T>) {
    for (double c : taylor_coeffs_f64(p, m)) out.push_back(T(c));
  } else {
    // Extended-precision types: the exact rational converted through its
    // integer numerator and denominator.
    const auto b = pseries::binomial_coeffs(p, static_cast<std::size_t>(m));
    for (const auto& c : b.coeffs()) out.push_back(T(c.get_num().get_str()) / T(c.get_den().get_str()));
  }
  return out;
}

}  // namespace detail

/// Scalar Schroeder iteration x_{k+1} = x_k T_m(1 - a x_k^{-p}) from x_0 = 1.
///
/// For T = double this performs exactly the floating-point operations of
/// run() on the 1x1 matrix [a]: p quotients y <- y / x, r = 1 - y, Horner on
/// r, then T_m(r) * x. Termination follows the same rules with
/// divergence_factor 10.
template <typename T>
ScalarRunResult<T> scalar_run(const T& a, int p, int m, double tol, int max_iter, double divergence_factor = 10.0) {
  using std::abs;
  pseries::require_valid_pm(p, m);
  if (!(tol > 0.0) || max_iter < 1) throw std::invalid_argument("scalar_run: need tol > 0 and max_iter >= 1");
  const auto b = detail::taylor_coeffs_as<T>(p, m);

  ScalarRunResult<T> out;
  T x = T(1);
  double r0 = 0.0;
  for (int k = 0;; ++k) {
    if (x == T(0)) throw std::domain_error("scalar_run: zero iterate at k = " + std::to_string(k));
    T y = a;
    for (int j = 0; j < p; ++j) y = y / x;
    const T r = T(1) - y;
    out.steps.push_back({k, x, r});
    out.x = x;

    const double rn = static_cast<double>(abs(r));
    if (!std::isfinite(rn)) {
      out.termination = Termination::diverged;
      break;
    }
    if (k == 0) r0 = rn;
    if (rn <= tol) {
      out.termination = Termination::converged;
      break;
    }
    if (k > 0 && rn > divergence_factor * r0) {
      out.termination = Termination::diverged;
      break;
    }
    if (k >= max_iter) {
      out.termination = Termination::max_iter;
      break;
    }

    T t = b[static_cast<std::size_t>(m)];
    for (int j = m - 1; j >= 0; --j) {
      t = t * r;
      t = t + b[static_cast<std::size_t>(j)];
    }
    x = t * x;
  }
  return out;
}

}  // namespace matroot::schroeder
