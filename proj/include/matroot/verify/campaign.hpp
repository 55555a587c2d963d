#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "matroot/pseries/iterates.hpp"
#include "matroot/verify/certificate.hpp"
#include "matroot/verify/ensemble.hpp"

namespace matroot::verify {

/// Grid and ensemble description for a verification campaign.
struct CampaignSpec {
  std::vector<int> p_list{2, 3, 5, 7};
  std::vector<int> m_list{1, 2, 3, 4};
  std::size_t k_max = 4;
  std::size_t order = 200;
  bool series_checks = true;
  bool include_control = true;
  std::size_t control_order = 10;

  std::vector<long> matrix_sizes;
  std::vector<EnsembleKind> ensembles{EnsembleKind::m1};
  int samples_per_cell = 0;
  std::uint64_t seed = 0;
  /// Each sample draws its ||B||_inf target uniformly from [rho_min, rho_max].
  double rho_min = 0.5;
  double rho_max = 0.5;
  double tol = 1e-13;
  int max_iter = 60;
  /// Slack added to every a-priori bound comparison on top of the oracle tail.
  double bound_slack = 1e-12;
  /// Entrywise tolerance for X_{k+1} <= X_k after scaling to unit max entry.
  double monotone_tol = 1e-12;
  double reference_tail_target = 1e-15;

  /// Throws std::invalid_argument on an empty grid or out-of-range values.
  void validate() const;
};

/// Accepts every CampaignSpec field by name; `ensemble` may be a string or a
/// list and `rho_target` sets both rho_min and rho_max.
CampaignSpec campaign_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const CampaignSpec& spec);

/// Sign pattern of the iterate rows c_{k,i}: leading 1, plateau c_{k,i} = b_i
/// for i <= (m+1)^k - 1, nonpositivity, strict negativity for k >= 2,
/// monotone decrease in k, and c_{1,i} = 0 for i > m.
std::vector<Certificate> check_sign_pattern(const pseries::CoeffTable& table);
std::vector<Certificate> check_sign_pattern(int p, int m, std::size_t k_max, std::size_t order);

/// The [1/0] dual Pade first iterate under the nonpositivity check. Must fail.
Certificate check_pade10_control(int p, std::size_t order);

/// Nonnegativity of the R(x_k) and x_k R(x_k) series for every row.
std::vector<Certificate> check_lemma_nonneg(const pseries::CoeffTable& table);
std::vector<Certificate> check_lemma_nonneg(int p, int m, std::size_t k_max, std::size_t order);

/// Recursive and direct a_i agree exactly.
Certificate check_a_recursion(int p, int m, std::size_t order);

/// b_0 = 1, b_i < 0, and s_1..s_{N+1} strictly decreasing inside (0, 1].
Certificate check_binomial_signs(int p, std::size_t order);

/// a_i > 0 with a_0 = ... = a_m = 1; c_i = 0 (i <= m) and c_i > 0 (i > m);
/// d_i = 0 (i <= m) and d_i > 0 (i > m).
std::vector<Certificate> check_coefficient_families(int p, int m, std::size_t order);

/// Coefficients e_i of x_1 - x_2 satisfy e_i >= d_i (-b_1) for i > m.
Certificate check_row_difference(const pseries::CoeffTable& table);

/// Every series check above for one (p, m) cell, sharing one table.
std::vector<Certificate> check_series_cell(int p, int m, std::size_t k_max, std::size_t order);

/// Runs the matrix iteration on seeded ensemble samples and checks, per
/// (ensemble, n, p, m) cell: both a-priori bounds against the binomial
/// reference (plus its tail and bound_slack), convergence, and for M1/H1
/// ensembles monotone decrease and class membership of every iterate.
std::vector<Certificate> check_matrix_theorems(const CampaignSpec& spec);

/// Series cells, negative controls and matrix checks, sorted.
std::vector<Certificate> run_campaign(const CampaignSpec& spec);

}  // namespace matroot::verify
