#pragma once

#include <cstddef>

#include "matroot/densela/dense.hpp"

namespace matroot::schroeder {

inline constexpr std::size_t kReferenceTermCap = 100000;

template <typename Scalar>
struct ReferenceRoot {
  DenseMatrix<Scalar> root;
  /// s_N ||B||^N, an upper bound on ||A^{1/p} - root|| in the chosen norm.
  double tail_bound = 0.0;
  std::size_t terms = 0;
};

/// Number of binomial terms N >= min_terms with s_N ||B||^N <= tail_target,
/// capped at kReferenceTermCap.
std::size_t reference_terms(double normB, int p, std::size_t min_terms, double tail_target);

/// Partial sum sum_{i<N} b_i B^i of (I - B)^{1/p}, B = I - A, evaluated by
/// Horner's rule. N grows from `terms` until the tail bound meets
/// tail_target. Throws std::invalid_argument unless ||B|| < 1 in `which`.
template <typename Scalar>
ReferenceRoot<Scalar> binomial_reference_root(const DenseMatrix<Scalar>& a, int p, std::size_t terms,
                                              double tail_target, NormKind which = NormKind::inf);

}  // namespace matroot::schroeder
