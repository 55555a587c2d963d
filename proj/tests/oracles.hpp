#pragma once

// Test-only reference computations. Nothing here calls into the library's
// series or iteration code paths.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Poly = std::vector<Q>;

/// Term-by-term rational Cauchy product truncated to `order`.
inline Poly mul(const Poly& u, const Poly& v, std::size_t order) {
  Poly w(order + 1, Q(0));
  for (std::size_t i = 0; i < u.size() && i <= order; ++i)
    for (std::size_t j = 0; j < v.size() && i + j <= order; ++j) w[i + j] += u[i] * v[j];
  return w;
}

/// Generalized binomial coefficient binom(alpha, i) as a falling product.
inline Q binom(const Q& alpha, std::size_t i) {
  Q r = 1;
  for (std::size_t j = 0; j < i; ++j) {
    r *= alpha - Q(static_cast<long>(j));
    r /= Q(static_cast<long>(j + 1));
  }
  return r;
}

/// (1 - t)^{1/p} coefficients by the binomial theorem: (-1)^i binom(1/p, i).
inline Poly binomial_series(int p, std::size_t order) {
  Poly b(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    b[i] = binom(Q(1, p), i);
    if (i % 2 == 1) b[i] = -b[i];
  }
  return b;
}

/// 1 / (1 - c z) = sum c^i z^i.
inline Poly geometric(const Q& c, std::size_t order) {
  Poly g(order + 1);
  Q power = 1;
  for (std::size_t i = 0; i <= order; ++i) {
    g[i] = power;
    power *= c;
  }
  return g;
}

/// Principal real root of a symmetric positive definite matrix through its
/// eigendecomposition.
inline Eigen::MatrixXd spd_root(const Eigen::MatrixXd& a, int p) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  Eigen::VectorXd d = es.eigenvalues().array().pow(1.0 / p);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

/// Newton update X ((p-1) I + A X^{-p}) / p with X^{-p} from an explicit inverse.
inline Eigen::MatrixXd newton_update(const Eigen::MatrixXd& a, const Eigen::MatrixXd& x, int p) {
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXd xinv = x.inverse();
  Eigen::MatrixXd xinvp = Eigen::MatrixXd::Identity(n, n);
  for (int j = 0; j < p; ++j) xinvp = xinvp * xinv;
  return x * ((p - 1) * Eigen::MatrixXd::Identity(n, n) + a * xinvp) / p;
}

/// Random rational with small numerator and denominator.
inline Q random_rational(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  Q q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace oracle
