#include "matroot/densela/structure.hpp"

#include <algorithm>

#include "matroot/densela/spectral.hpp"

namespace matroot {

StructureReport classify(const RealMatrix& a, const ClassifyOptions& options) {
  require_square(a);
  const Eigen::Index n = a.rows();
  StructureReport report;

  report.is_Z = true;
  for (Eigen::Index i = 0; i < n && report.is_Z; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && a(i, j) > 0.0) {
        report.is_Z = false;
        break;
      }

  const auto diag = a.diagonal();
  report.diag_range = {diag.minCoeff(), diag.maxCoeff()};
  const bool diag_ok = report.diag_range.first > 0.0 && report.diag_range.second <= 1.0;

  if (diag_ok) {
    // With the diagonal in (0, 1], I - M(A) is entrywise nonnegative.
    const RealMatrix b = RealMatrix::Identity(n, n) - comparison_matrix(a);
    const auto rho = spectral_radius_detail(b, options.power_iters, options.seed);
    report.rho_estimate = rho.value;
    report.rho_certified = rho.certified;
    report.method_note = "rho(I - M(A)): " + rho.method;
    const bool comparison_is_m1 = rho.value < 1.0;
    report.is_H1 = comparison_is_m1;
    report.is_M1 = report.is_Z && comparison_is_m1;
  } else {
    const RealMatrix b = RealMatrix::Identity(n, n) - a;
    const auto rho = spectral_radius_detail(b, options.power_iters, options.seed);
    report.rho_estimate = rho.value;
    report.rho_certified = rho.certified;
    report.method_note = "diagonal outside (0, 1]; rho(I - A): " + rho.method;
  }
  return report;
}

StructureReport classify(const ComplexMatrix& a, const ClassifyOptions&) {
  require_square(a);
  StructureReport report;
  report.method_note = "complex input: structure classes are defined for real matrices only";
  return report;
}

nlohmann::json to_json(const StructureReport& report) {
  return {{"is_Z", report.is_Z},
          {"is_M1", report.is_M1},
          {"is_H1", report.is_H1},
          {"diag_range", {report.diag_range.first, report.diag_range.second}},
          {"rho_estimate", report.rho_estimate},
          {"rho_certified", report.rho_certified},
          {"method_note", report.method_note}};
}

}  // namespace matroot
