#include "matroot/verify/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "matroot/densela/lu.hpp"

namespace matroot::verify {

EnsembleKind parse_ensemble(const std::string& name) {
  if (name == "m1") return EnsembleKind::m1;
  if (name == "h1") return EnsembleKind::h1;
  if (name == "disk_spectrum") return EnsembleKind::disk_spectrum;
  throw std::invalid_argument("unknown ensemble '" + name + "' (expected m1, h1 or disk_spectrum)");
}

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::m1: return "m1";
    case EnsembleKind::h1: return "h1";
    case EnsembleKind::disk_spectrum: return "disk_spectrum";
  }
  return "?";
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(mix(base) ^ a) ^ b) ^ c);
}

namespace {

RealMatrix m1_sample(Eigen::Index n, double rho, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RealMatrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      b(i, j) = unit(rng) + 1e-3;
      sum += b(i, j);
    }
    b.row(i) = (b.row(i) / sum) * rho;
  }
  return RealMatrix::Identity(n, n) - b;
}

RealMatrix disk_sample(Eigen::Index n, double rho, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // D holds -mu_j, so that B = V D V^{-1}.
  RealMatrix d = RealMatrix::Zero(n, n);
  Eigen::Index i = 0;
  while (i < n) {
    if (i + 1 < n && unit(rng) < 0.3) {
      const double radius = rho * std::sqrt(unit(rng));
      const double angle = 2.0 * std::numbers::pi * unit(rng);
      const double re = radius * std::cos(angle);
      const double im = radius * std::sin(angle);
      d(i, i) = -re;
      d(i + 1, i + 1) = -re;
      d(i, i + 1) = im;
      d(i + 1, i) = -im;
      i += 2;
    } else {
      d(i, i) = -rho * sym(rng);
      i += 1;
    }
  }

  RealMatrix v = RealMatrix::Identity(n, n);
  const double scale = 0.5 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) v(r, c) += scale * sym(rng);

  RealMatrix b = matmul(matmul(v, d), inverse(v));
  const double nb = norm(b, NormKind::inf);
  if (nb > rho) b *= rho / nb;
  return RealMatrix::Identity(n, n) - b;
}

}  // namespace

RealMatrix generate_ensemble(EnsembleKind kind, Eigen::Index n, double rho_target, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("ensemble size must be >= 1");
  if (!(rho_target > 0.0 && rho_target < 1.0)) throw std::invalid_argument("rho_target must lie in (0, 1)");
  std::mt19937_64 rng(seed);
  switch (kind) {
    case EnsembleKind::m1: return m1_sample(n, rho_target, rng);
    case EnsembleKind::h1: {
      RealMatrix a = m1_sample(n, rho_target, rng);
      std::bernoulli_distribution flip(0.5);
      for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
          if (r != c && flip(rng)) a(r, c) = -a(r, c);
      return a;
    }
    case EnsembleKind::disk_spectrum: return disk_sample(n, rho_target, rng);
  }
  throw std::invalid_argument("unknown ensemble kind");
}

}  // namespace matroot::verify
