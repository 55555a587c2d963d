#pragma once

#include <cstdint>
#include <string>

#include "matroot/densela/dense.hpp"

namespace matroot {

struct RadiusEstimate {
  double value = 0.0;
  /// True when value is a Collatz-Wielandt upper bound for an entrywise
  /// nonnegative matrix; false for plain power-iteration heuristics.
  bool certified = false;
  std::string method;
};

/// Spectral radius of B from a fixed number of power iterations with a
/// seeded random start.
///
/// For B >= 0 entrywise the iteration runs on B + ||B||_inf I, whose Perron
/// vector is B's and whose iterates stay strictly positive; the result is
/// then max_i (Bv)_i / v_i, an upper bound on rho(B) that tightens to it,
/// capped by ||B||_inf and ||B||_1.
/// Otherwise the growth rate of ||B^k v|| over the second half of the run is
/// reported as a heuristic.
RadiusEstimate spectral_radius_detail(const RealMatrix& b, int iters = 300, std::uint64_t seed = 0);
RadiusEstimate spectral_radius_detail(const ComplexMatrix& b, int iters = 300, std::uint64_t seed = 0);

template <typename Scalar>
double spectral_radius_estimate(const DenseMatrix<Scalar>& b, int iters = 300, std::uint64_t seed = 0) {
  return spectral_radius_detail(b, iters, seed).value;
}

/// Whether every Gershgorin disk of A (by rows, or else by columns) lies in
/// the open disk |z - 1| < 1.
template <typename Scalar>
bool gershgorin_inside_unit_disk(const DenseMatrix<Scalar>& a) {
  require_square(a);
  const Eigen::Index n = a.rows();
  auto inside = [&](bool by_rows) {
    for (Eigen::Index i = 0; i < n; ++i) {
      double radius = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j != i) radius += std::abs(by_rows ? a(i, j) : a(j, i));
      }
      if (!(std::abs(a(i, i) - Scalar(1)) + radius < 1.0)) return false;
    }
    return true;
  };
  return inside(true) || inside(false);
}

}  // namespace matroot
