#include "matroot/schroeder/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "matroot/schroeder/bounds.hpp"

namespace matroot::schroeder {

std::size_t reference_terms(double normB, int p, std::size_t min_terms, double tail_target) {
  if (normB == 0.0) return std::max<std::size_t>(min_terms, 1);
  // s_N and ||B||^N advanced together; s_{N+1} = s_N (1 - 1/(p N)).
  double s = 1.0;
  double power = normB;
  std::size_t n = 1;
  const std::size_t start = std::max<std::size_t>(min_terms, 1);
  while (n < kReferenceTermCap && (n < start || s * power > tail_target)) {
    s *= 1.0 - 1.0 / (static_cast<double>(p) * static_cast<double>(n));
    power *= normB;
    ++n;
  }
  return n;
}

template <typename Scalar>
ReferenceRoot<Scalar> binomial_reference_root(const DenseMatrix<Scalar>& a, int p, std::size_t terms,
                                              double tail_target, NormKind which) {
  require_square(a);
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  const Eigen::Index n = a.rows();
  const DenseMatrix<Scalar> b = identity<Scalar>(n) - a;
  const double normB = norm(b, which);
  if (!(normB < 1.0)) throw std::invalid_argument("binomial reference root needs ||I - A|| < 1");
  if (normB == 0.0) return {identity<Scalar>(n), 0.0, 1};

  const std::size_t count = reference_terms(normB, p, terms, tail_target);
  const auto coeffs = binomial_coeffs_f64(p, count);

  DenseMatrix<Scalar> sum = DenseMatrix<Scalar>::Zero(n, n);
  sum.diagonal().setConstant(Scalar(coeffs.back()));
  for (std::size_t i = count - 1; i-- > 0;) {
    sum = matmul(sum, b);
    sum.diagonal().array() += Scalar(coeffs[i]);
  }
  const double tail = tail_sum(p, count) * std::pow(normB, static_cast<double>(count));
  return {std::move(sum), tail, count};
}

template ReferenceRoot<double> binomial_reference_root(const RealMatrix&, int, std::size_t, double, NormKind);
template ReferenceRoot<std::complex<double>> binomial_reference_root(const ComplexMatrix&, int, std::size_t, double,
                                                                     NormKind);

}  // namespace matroot::schroeder
