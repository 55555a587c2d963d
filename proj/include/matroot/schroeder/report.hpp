#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace matroot::schroeder {

enum class Termination { converged, max_iter, diverged, singular_iterate };

std::string to_string(Termination t);

struct StepRecord {
  int k = 0;
  double residual_norm = 0.0;
  /// Absent when no computed norm of B is below 1.
  std::optional<double> bound_plain;
  std::optional<double> bound_sharp;
  /// ||X_k - X_{k-1}||; zero at k = 0.
  double delta_norm = 0.0;
};

struct Precheck {
  bool performed = false;
  double normB_one = 0.0;
  double normB_inf = 0.0;
  bool gershgorin_ok = false;
  double rho_estimate = 0.0;
  std::string rho_method;
  /// Set when neither Gershgorin nor a norm of B certifies |z - 1| < 1.
  std::optional<std::string> warning;
};

struct IterationReport {
  int p = 0;
  int m = 0;
  std::string norm;
  /// ||B|| in the chosen norm, B = I - A.
  double normB = 0.0;
  bool bounds_available = false;
  std::vector<StepRecord> steps;
  Termination termination = Termination::max_iter;
  std::string message;
  Precheck precheck;

  const StepRecord& last() const { return steps.back(); }
  /// Number of Schroeder steps taken (index of the final iterate).
  int iterations() const { return steps.empty() ? 0 : steps.back().k; }
};

nlohmann::json to_json(const StepRecord& step);
nlohmann::json to_json(const IterationReport& report);

}  // namespace matroot::schroeder
