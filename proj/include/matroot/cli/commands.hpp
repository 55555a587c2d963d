#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "matroot/densela/dense.hpp"

namespace matroot::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kComputationFailed = 1,
  kUsageError = 2,
  kVerificationFailed = 3,
};

struct ComputeOptions {
  std::string input;
  std::optional<std::string> out;
  std::optional<std::string> report;
  int p = 2;
  int m = 1;
  double tol = 1e-13;
  int max_iter = 60;
  NormKind norm = NormKind::inf;
  bool skip_precheck = false;
};

struct SeriesOptions {
  int p = 2;
  int m = 1;
  std::size_t order = 10;
  std::size_t k = 2;
  std::string format = "csv";
  std::optional<std::string> out;
};

struct VerifyOptions {
  std::optional<std::string> config;
  std::optional<std::string> report;
  std::optional<std::uint64_t> seed;
};

struct StructureOptions {
  std::string input;
  std::uint64_t seed = 0;
};

int cmd_compute(const ComputeOptions& options, std::ostream& out, std::ostream& err);
int cmd_series(const SeriesOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_structure(const StructureOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and dispatches; usage errors map to kUsageError.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace matroot::cli
