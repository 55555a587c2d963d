#include "matroot/densela/spectral.hpp"

#include <algorithm>
#include <initializer_list>
#include <cmath>
#include <random>

namespace matroot {

namespace {

bool is_nonnegative(const RealMatrix& b) { return b.size() == 0 || b.minCoeff() >= 0.0; }

template <typename Scalar>
RadiusEstimate heuristic_power_iteration(const DenseMatrix<Scalar>& b, int iters, std::uint64_t seed) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index n = b.rows();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if constexpr (is_complex_v<Scalar>) {
      v(i) = Scalar(dist(rng), dist(rng));
    } else {
      v(i) = dist(rng);
    }
  }
  v.normalize();

  // log ||B^k v0|| accumulated so that the window average survives rotating
  // or oscillating dominant pairs.
  const int window_start = iters / 2;
  double log_growth = 0.0;
  for (int k = 0; k < iters; ++k) {
    Vector w = b * v;
    const double nw = w.norm();
    if (nw == 0.0 || !std::isfinite(nw)) {
      return {0.0, false, "power iteration hit the zero vector; nilpotent direction, estimate 0"};
    }
    if (k >= window_start) log_growth += std::log(nw);
    v = w / nw;
  }
  const int counted = iters - window_start;
  return {std::exp(log_growth / counted), false,
          "heuristic: geometric-mean growth of power iteration over " + std::to_string(counted) + " steps"};
}

}  // namespace

RadiusEstimate spectral_radius_detail(const RealMatrix& b, int iters, std::uint64_t seed) {
  require_square(b);
  if (iters < 2) throw std::invalid_argument("spectral radius estimate needs at least 2 iterations");
  if (b.cwiseAbs().maxCoeff() == 0.0) return {0.0, true, "zero matrix"};
  if (!is_nonnegative(b)) return heuristic_power_iteration(b, iters, seed);

  const Eigen::Index n = b.rows();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = dist(rng);

  // Shift on the scale of B so the contraction rate does not depend on ||B||.
  const double shift = norm(b, NormKind::inf);
  for (int k = 0; k < iters; ++k) {
    Eigen::VectorXd w = b * v + shift * v;
    v = w / w.maxCoeff();
  }
  if (!(v.minCoeff() > 0.0)) {
    // Underflow in the Perron iterate; no positive test vector is available.
    return heuristic_power_iteration(b, iters, seed);
  }
  const Eigen::VectorXd bv = b * v;
  double upper = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) upper = std::max(upper, bv(i) / v(i));
  upper = std::min({upper, shift, norm(b, NormKind::one)});
  return {upper, true, "Collatz-Wielandt upper bound from " + std::to_string(iters) + " shifted power iterations"};
}

RadiusEstimate spectral_radius_detail(const ComplexMatrix& b, int iters, std::uint64_t seed) {
  require_square(b);
  if (iters < 2) throw std::invalid_argument("spectral radius estimate needs at least 2 iterations");
  if (b.cwiseAbs().maxCoeff() == 0.0) return {0.0, true, "zero matrix"};
  return heuristic_power_iteration(b, iters, seed);
}

}  // namespace matroot
