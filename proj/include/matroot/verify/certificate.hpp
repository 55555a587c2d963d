#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace matroot::verify {

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);

/// Outcome of one named check for one parameter set. A failing certificate
/// carries a witness locating the violation (exact values as "num/den").
struct Certificate {
  std::string check_id;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::pass;
  nlohmann::json witness = nullptr;
  /// Human-readable statement of what was covered, e.g. "k <= 4, 1 <= i <= 200".
  std::string verified_range;
  /// Negative controls: the check is required to fail.
  bool expected_fail = false;
  nlohmann::json details = nullptr;

  /// pass for ordinary checks, fail for negative controls.
  bool as_expected() const;
};

nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const std::vector<Certificate>& certs);

/// Sorts by (check_id, params) so merged output is deterministic.
void sort_certificates(std::vector<Certificate>& certs);

/// True when every ordinary certificate passed or was skipped and every
/// negative control failed.
bool campaign_passed(const std::vector<Certificate>& certs);

/// Per-check_id counts, one line each, plus an overall verdict line.
void print_summary(std::ostream& out, const std::vector<Certificate>& certs);

}  // namespace matroot::verify
