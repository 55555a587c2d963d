#include "matroot/densela/dense.hpp"

namespace matroot {

NormKind parse_norm_kind(const std::string& name) {
  if (name == "one" || name == "1") return NormKind::one;
  if (name == "inf") return NormKind::inf;
  if (name == "fro") return NormKind::fro;
  throw std::invalid_argument("unknown norm '" + name + "' (expected one, inf or fro)");
}

std::string to_string(NormKind kind) {
  switch (kind) {
    case NormKind::one: return "one";
    case NormKind::inf: return "inf";
    case NormKind::fro: return "fro";
  }
  return "?";
}

bool entrywise_leq(const RealMatrix& a, const RealMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("entrywise_leq: shape mismatch");
  return ((a - b).array() <= tol).all();
}

RealMatrix comparison_matrix(const RealMatrix& a) {
  require_square(a);
  RealMatrix m = -a.cwiseAbs();
  m.diagonal() = a.diagonal().cwiseAbs();
  return m;
}

RealMatrix comparison_matrix(const ComplexMatrix&) {
  throw std::invalid_argument("comparison matrix is only defined here for real input");
}

}  // namespace matroot
