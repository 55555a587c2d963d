#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "matroot/densela/dense.hpp"

namespace matroot {

/// Pivots smaller than this times max|a_ij| mark the matrix as singular.
inline constexpr double kPivotTolerance = 1e-14;

/// Doolittle LU with partial (row) pivoting, PA = LU. L has a unit diagonal
/// and shares storage with U. Triangular solves divide by the pivots rather
/// than multiplying by their reciprocals, so a 1x1 solve is a plain quotient.
template <typename Scalar>
class LuDecomposition {
 public:
  using Matrix = DenseMatrix<Scalar>;

  explicit LuDecomposition(const Matrix& a) : lu_(a), perm_(static_cast<std::size_t>(a.rows())) {
    require_square(a, "LU input");
    const Eigen::Index n = a.rows();
    const double threshold = kPivotTolerance * max_norm(a);
    for (Eigen::Index i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i;

    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index piv = k;
      double best = std::abs(lu_(k, k));
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (std::abs(lu_(i, k)) > best) {
          best = std::abs(lu_(i, k));
          piv = i;
        }
      }
      if (!(best >= threshold) || best == 0.0) {
        throw SingularMatrixError("matrix is singular to working precision (pivot " + std::to_string(best) +
                                  " at column " + std::to_string(k) + ")");
      }
      if (piv != k) {
        lu_.row(k).swap(lu_.row(piv));
        std::swap(perm_[static_cast<std::size_t>(k)], perm_[static_cast<std::size_t>(piv)]);
      }
      for (Eigen::Index i = k + 1; i < n; ++i) {
        lu_(i, k) /= lu_(k, k);
        const Scalar l = lu_(i, k);
        if (l == Scalar(0)) continue;
        for (Eigen::Index j = k + 1; j < n; ++j) lu_(i, j) -= l * lu_(k, j);
      }
    }
  }

  Eigen::Index size() const { return lu_.rows(); }
  const Matrix& packed() const { return lu_; }
  const std::vector<Eigen::Index>& permutation() const { return perm_; }

  /// X with A X = rhs.
  Matrix solve(const Matrix& rhs) const {
    const Eigen::Index n = size();
    if (rhs.rows() != n) throw std::invalid_argument("lu solve: right-hand side has wrong row count");
    Matrix x(n, rhs.cols());
    for (Eigen::Index i = 0; i < n; ++i) x.row(i) = rhs.row(perm_[static_cast<std::size_t>(i)]);
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      for (Eigen::Index i = 1; i < n; ++i) {
        Scalar acc = x(i, c);
        for (Eigen::Index j = 0; j < i; ++j) acc -= lu_(i, j) * x(j, c);
        x(i, c) = acc;
      }
      for (Eigen::Index i = n; i-- > 0;) {
        Scalar acc = x(i, c);
        for (Eigen::Index j = i + 1; j < n; ++j) acc -= lu_(i, j) * x(j, c);
        x(i, c) = acc / lu_(i, i);
      }
    }
    return x;
  }

  /// Y with Y A = rhs, i.e. rhs A^{-1}, from A^{-1} = U^{-1} L^{-1} P.
  Matrix solve_right(const Matrix& rhs) const {
    const Eigen::Index n = size();
    if (rhs.cols() != n) throw std::invalid_argument("lu right solve: left-hand side has wrong column count");
    Matrix z(rhs.rows(), n);
    for (Eigen::Index r = 0; r < rhs.rows(); ++r) {
      // z U = rhs
      for (Eigen::Index j = 0; j < n; ++j) {
        Scalar acc = rhs(r, j);
        for (Eigen::Index k = 0; k < j; ++k) acc -= z(r, k) * lu_(k, j);
        z(r, j) = acc / lu_(j, j);
      }
      // w L = z, in place
      for (Eigen::Index j = n; j-- > 0;) {
        Scalar acc = z(r, j);
        for (Eigen::Index k = j + 1; k < n; ++k) acc -= z(r, k) * lu_(k, j);
        z(r, j) = acc;
      }
    }
    Matrix y(rhs.rows(), n);
    for (Eigen::Index i = 0; i < n; ++i) y.col(perm_[static_cast<std::size_t>(i)]) = z.col(i);
    return y;
  }

 private:
  Matrix lu_;
  std::vector<Eigen::Index> perm_;
};

template <typename Scalar>
DenseMatrix<Scalar> lu_solve(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& rhs) {
  return LuDecomposition<Scalar>(a).solve(rhs);
}

template <typename Scalar>
DenseMatrix<Scalar> inverse(const DenseMatrix<Scalar>& a) {
  return lu_solve(a, identity<Scalar>(a.rows()));
}

/// A^e by binary exponentiation on A, or on inverse(A) when e < 0.
template <typename Scalar>
DenseMatrix<Scalar> mat_int_pow(const DenseMatrix<Scalar>& a, long e) {
  require_square(a);
  DenseMatrix<Scalar> base = e < 0 ? inverse(a) : a;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  DenseMatrix<Scalar> result = identity<Scalar>(a.rows());
  bool first = true;
  while (k != 0) {
    if (k & 1UL) {
      result = first ? base : matmul(result, base);
      first = false;
    }
    k >>= 1;
    if (k != 0) base = matmul(base, base);
  }
  return result;
}

}  // namespace matroot
