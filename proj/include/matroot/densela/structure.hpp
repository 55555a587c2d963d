#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "matroot/densela/dense.hpp"

namespace matroot {

/// Membership of a real square matrix in the Z-matrix class and in
/// M1 / H1 (nonsingular M- / H-matrices with diagonal entries in (0, 1]).
struct StructureReport {
  bool is_Z = false;
  bool is_M1 = false;
  bool is_H1 = false;
  std::pair<double, double> diag_range{0.0, 0.0};
  double rho_estimate = 0.0;
  bool rho_certified = false;
  std::string method_note;
};

struct ClassifyOptions {
  int power_iters = 300;
  std::uint64_t seed = 0;
};

/// is_M1: Z-matrix, diagonal in (0, 1], rho(I - A) < 1 (I - A >= 0 then).
/// is_H1: diagonal in (0, 1] and M(A) is in M1.
/// rho_estimate is for I - M(A), which equals I - A on Z-matrices.
StructureReport classify(const RealMatrix& a, const ClassifyOptions& options = {});
/// Complex input: all flags false.
StructureReport classify(const ComplexMatrix& a, const ClassifyOptions& options = {});

nlohmann::json to_json(const StructureReport& report);

}  // namespace matroot
