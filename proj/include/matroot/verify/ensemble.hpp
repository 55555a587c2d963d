#pragma once

#include <cstdint>
#include <string>

#include "matroot/densela/dense.hpp"

namespace matroot::verify {

enum class EnsembleKind { m1, h1, disk_spectrum };

EnsembleKind parse_ensemble(const std::string& name);
std::string to_string(EnsembleKind kind);

/// Mixes a base seed with sample coordinates (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

/// Random test matrix A = I - B.
///   m1:            B >= 0 uniform, every row scaled to sum rho_target.
///   h1:            an m1 sample with the signs of a random subset of
///                  off-diagonal entries flipped; M(A) is unchanged.
///   disk_spectrum: V diag(1 + mu_j) V^{-1}, |mu_j| <= rho_target, some
///                  mu_j in complex-conjugate pairs (2x2 real blocks), V a
///                  random perturbation of I with condition number below ~4;
///                  B is then scaled if needed so that ||B||_inf <= rho_target.
/// Throws std::invalid_argument unless 0 < rho_target < 1 and n >= 1.
RealMatrix generate_ensemble(EnsembleKind kind, Eigen::Index n, double rho_target, std::uint64_t seed);

}  // namespace matroot::verify
