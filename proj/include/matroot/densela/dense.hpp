#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Core>

namespace matroot {

/// Row-major dense matrix over a real or complex binary64 scalar.
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<std::complex<double>>;

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_complex_v = is_complex<T>::value;

enum class NormKind { one, inf, fro };

NormKind parse_norm_kind(const std::string& name);
std::string to_string(NormKind kind);

/// Raised when a factorization meets a pivot below the relative tolerance.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what = "matrix") {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw std::invalid_argument(std::string(what) + " must be square and nonempty");
  }
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const auto v = a(i, j);
      if constexpr (is_complex_v<typename Derived::Scalar>) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
      } else {
        if (!std::isfinite(v)) return false;
      }
    }
  return true;
}

template <typename Scalar>
DenseMatrix<Scalar> identity(Eigen::Index n) {
  return DenseMatrix<Scalar>::Identity(n, n);
}

template <typename Scalar>
DenseMatrix<Scalar> matmul(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
  DenseMatrix<Scalar> c(a.rows(), b.cols());
  c.noalias() = a * b;
  return c;
}

/// Largest entry magnitude.
template <typename Derived>
double max_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.size() == 0 ? 0.0 : static_cast<double>(a.cwiseAbs().maxCoeff());
}

/// Induced 1-norm (max column sum), induced inf-norm (max row sum) or Frobenius.
template <typename Derived>
double norm(const Eigen::MatrixBase<Derived>& a, NormKind which) {
  if (a.size() == 0) return 0.0;
  switch (which) {
    case NormKind::one: return a.cwiseAbs().colwise().sum().maxCoeff();
    case NormKind::inf: return a.cwiseAbs().rowwise().sum().maxCoeff();
    case NormKind::fro: return a.norm();
  }
  throw std::invalid_argument("unknown norm kind");
}

/// True iff a(i,j) <= b(i,j) + tol everywhere.
bool entrywise_leq(const RealMatrix& a, const RealMatrix& b, double tol);

/// M(A): |a_ii| on the diagonal, -|a_ij| off it.
RealMatrix comparison_matrix(const RealMatrix& a);
RealMatrix comparison_matrix(const ComplexMatrix& a);

}  // namespace matroot
