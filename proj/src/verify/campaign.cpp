#include "matroot/verify/campaign.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "matroot/densela/structure.hpp"
#include "matroot/pseries/coefficients.hpp"
#include "matroot/schroeder/iteration.hpp"
#include "matroot/schroeder/reference.hpp"

namespace matroot::verify {

using pseries::CoeffTable;
using pseries::TruncatedSeries;
using matroot::to_string;

void CampaignSpec::validate() const {
  if (p_list.empty() || m_list.empty()) throw std::invalid_argument("campaign grid is empty (p_list and m_list)");
  for (int p : p_list)
    if (p < 2) throw std::invalid_argument("campaign p values must be >= 2");
  for (int m : m_list)
    if (m < 1) throw std::invalid_argument("campaign m values must be >= 1");
  if (order < 1) throw std::invalid_argument("campaign order must be >= 1");
  if (control_order < 2) throw std::invalid_argument("control_order must be >= 2");
  for (long n : matrix_sizes)
    if (n < 1) throw std::invalid_argument("matrix sizes must be >= 1");
  if (samples_per_cell < 0) throw std::invalid_argument("samples_per_cell must be >= 0");
  if (!(rho_min > 0.0 && rho_min <= rho_max && rho_max < 1.0)) {
    throw std::invalid_argument("need 0 < rho_min <= rho_max < 1");
  }
  if (!(tol > 0.0) || max_iter < 1) throw std::invalid_argument("need tol > 0 and max_iter >= 1");
}

CampaignSpec campaign_from_json(const nlohmann::json& doc) {
  CampaignSpec spec;
  try {
    if (!doc.is_object()) throw std::invalid_argument("campaign config must be a JSON object");
    if (doc.contains("p_list")) spec.p_list = doc.at("p_list").get<std::vector<int>>();
    if (doc.contains("m_list")) spec.m_list = doc.at("m_list").get<std::vector<int>>();
    spec.k_max = doc.value("k_max", spec.k_max);
    spec.order = doc.value("order", spec.order);
    spec.series_checks = doc.value("series_checks", spec.series_checks);
    spec.include_control = doc.value("include_control", spec.include_control);
    spec.control_order = doc.value("control_order", spec.control_order);
    if (doc.contains("matrix_sizes")) spec.matrix_sizes = doc.at("matrix_sizes").get<std::vector<long>>();
    if (doc.contains("ensemble")) {
      const auto& e = doc.at("ensemble");
      spec.ensembles.clear();
      if (e.is_string()) {
        spec.ensembles.push_back(parse_ensemble(e.get<std::string>()));
      } else {
        for (const auto& name : e) spec.ensembles.push_back(parse_ensemble(name.get<std::string>()));
      }
    }
    spec.samples_per_cell = doc.value("samples_per_cell", spec.samples_per_cell);
    spec.seed = doc.value("seed", spec.seed);
    if (doc.contains("rho_target")) spec.rho_min = spec.rho_max = doc.at("rho_target").get<double>();
    spec.rho_min = doc.value("rho_min", spec.rho_min);
    spec.rho_max = doc.value("rho_max", spec.rho_max);
    spec.tol = doc.value("tol", spec.tol);
    spec.max_iter = doc.value("max_iter", spec.max_iter);
    spec.bound_slack = doc.value("bound_slack", spec.bound_slack);
    spec.monotone_tol = doc.value("monotone_tol", spec.monotone_tol);
    spec.reference_tail_target = doc.value("reference_tail_target", spec.reference_tail_target);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed campaign config: ") + e.what());
  }
  spec.validate();
  return spec;
}

nlohmann::json to_json(const CampaignSpec& spec) {
  std::vector<std::string> ensembles;
  for (auto e : spec.ensembles) ensembles.push_back(to_string(e));
  return {{"p_list", spec.p_list},
          {"m_list", spec.m_list},
          {"k_max", spec.k_max},
          {"order", spec.order},
          {"series_checks", spec.series_checks},
          {"include_control", spec.include_control},
          {"control_order", spec.control_order},
          {"matrix_sizes", spec.matrix_sizes},
          {"ensemble", ensembles},
          {"samples_per_cell", spec.samples_per_cell},
          {"seed", spec.seed},
          {"rho_min", spec.rho_min},
          {"rho_max", spec.rho_max},
          {"tol", spec.tol},
          {"max_iter", spec.max_iter},
          {"bound_slack", spec.bound_slack},
          {"monotone_tol", spec.monotone_tol},
          {"reference_tail_target", spec.reference_tail_target}};
}

namespace {

nlohmann::json series_params(int p, int m, std::size_t k_max, std::size_t order) {
  return {{"p", p}, {"m", m}, {"k_max", k_max}, {"order", order}};
}

nlohmann::json exact_witness(std::optional<std::size_t> k, std::size_t i, const Rational& value,
                             const std::string& requirement) {
  nlohmann::json w{{"i", i}, {"value", to_string(value)}, {"requirement", requirement}};
  if (k) w["k"] = *k;
  return w;
}

Certificate make_cert(std::string id, nlohmann::json params, std::string range) {
  Certificate c;
  c.check_id = std::move(id);
  c.params = std::move(params);
  c.verified_range = std::move(range);
  return c;
}

void fail_with(Certificate& c, nlohmann::json witness) {
  if (c.verdict == Verdict::fail) return;
  c.verdict = Verdict::fail;
  c.witness = std::move(witness);
}

/// (m+1)^k - 1 clipped to the order.
std::size_t plateau_end(int m, std::size_t k, std::size_t order) {
  std::size_t e = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (e > order + 1) break;
    e *= static_cast<std::size_t>(m + 1);
  }
  return std::min(e - 1, order);
}

/// First i >= 1 with series[i] > 0.
std::optional<std::size_t> first_positive(const TruncatedSeries& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] > 0) return i;
  return std::nullopt;
}

}  // namespace

std::vector<Certificate> check_sign_pattern(const CoeffTable& t) {
  const auto params = series_params(t.p, t.m, t.k_max(), t.order);
  const auto b = pseries::binomial_coeffs(t.p, t.order);
  const std::string all_rows = "0 <= k <= " + std::to_string(t.k_max());
  const std::string n_range = "i <= " + std::to_string(t.order);

  auto leading = make_cert("sign.leading_one", params, all_rows + ", i = 0");
  auto plateau = make_cert("sign.plateau", params, all_rows + ", i <= min((m+1)^k - 1, " + std::to_string(t.order) + ")");
  auto nonpos = make_cert("sign.nonpositive", params, all_rows + ", 1 <= " + n_range);
  auto monotone = make_cert("sign.row_monotone", params, "0 <= k < " + std::to_string(t.k_max()) + ", 1 <= " + n_range);
  auto strict = make_cert("sign.strict_negative", params, "2 <= k <= " + std::to_string(t.k_max()) + ", 1 <= " + n_range);
  auto tail_zero = make_cert("sign.row1_tail_zero", params, "k = 1, " + std::to_string(t.m + 1) + " <= " + n_range);

  // Smallest k with c_{k,i} == b_i, per i (null when no row reaches it).
  nlohmann::json first_equal = nlohmann::json::array();
  for (std::size_t i = 0; i <= t.order; ++i) {
    nlohmann::json hit = nullptr;
    for (std::size_t k = 0; k <= t.k_max(); ++k)
      if (t.rows[k][i] == b[i]) {
        hit = k;
        break;
      }
    first_equal.push_back(hit);
  }
  plateau.details = {{"first_k_with_c_equal_b", std::move(first_equal)}};

  for (std::size_t k = 0; k <= t.k_max(); ++k) {
    const auto& row = t.rows[k];
    if (row[0] != 1) fail_with(leading, exact_witness(k, 0, row[0], "c_{k,0} = 1"));
    for (std::size_t i = 0; i <= plateau_end(t.m, k, t.order); ++i) {
      if (row[i] != b[i]) {
        auto w = exact_witness(k, i, row[i], "c_{k,i} = b_i");
        w["expected"] = to_string(b[i]);
        fail_with(plateau, w);
      }
    }
    for (std::size_t i = 1; i <= t.order; ++i) {
      if (row[i] > 0) fail_with(nonpos, exact_witness(k, i, row[i], "c_{k,i} <= 0"));
      if (k >= 2 && row[i] >= 0) fail_with(strict, exact_witness(k, i, row[i], "c_{k,i} < 0"));
      if (k + 1 <= t.k_max() && t.rows[k + 1][i] > row[i]) {
        auto w = exact_witness(k + 1, i, t.rows[k + 1][i], "c_{k+1,i} <= c_{k,i}");
        w["previous"] = to_string(row[i]);
        fail_with(monotone, w);
      }
    }
  }
  if (t.k_max() >= 1) {
    for (std::size_t i = static_cast<std::size_t>(t.m) + 1; i <= t.order; ++i)
      if (t.rows[1][i] != 0) fail_with(tail_zero, exact_witness(1, i, t.rows[1][i], "c_{1,i} = 0"));
  } else {
    tail_zero.verdict = Verdict::skipped;
  }
  if (t.k_max() < 2) strict.verdict = Verdict::skipped;
  if (t.k_max() < 1) monotone.verdict = Verdict::skipped;

  return {leading, plateau, nonpos, monotone, strict, tail_zero};
}

std::vector<Certificate> check_sign_pattern(int p, int m, std::size_t k_max, std::size_t order) {
  return check_sign_pattern(pseries::schroeder_coeff_table(p, m, k_max, order));
}

Certificate check_pade10_control(int p, std::size_t order) {
  auto cert = make_cert("control.pade10_nonpositive", {{"p", p}, {"order", order}},
                        "1 <= i <= " + std::to_string(order));
  cert.expected_fail = true;
  const auto x1 = pseries::pade10_first_iterate(p, order);
  if (const auto i = first_positive(x1)) fail_with(cert, exact_witness(1, *i, x1[*i], "c_{1,i} <= 0"));
  return cert;
}

std::vector<Certificate> check_lemma_nonneg(const CoeffTable& t) {
  const auto params = series_params(t.p, t.m, t.k_max(), t.order);
  const std::string range = "0 <= k <= " + std::to_string(t.k_max()) + ", 0 <= i <= " + std::to_string(t.order);
  auto res = make_cert("lemma.residual_nonneg", params, range);
  auto xr = make_cert("lemma.xr_nonneg", params, range);
  for (std::size_t k = 0; k <= t.k_max(); ++k) {
    const auto r = pseries::residual_series(t.rows[k], t.p);
    const auto xrk = pseries::series_mul(t.rows[k], r);
    for (std::size_t i = 0; i <= t.order; ++i) {
      if (r[i] < 0) fail_with(res, exact_witness(k, i, r[i], "[z^i] R(x_k) >= 0"));
      if (xrk[i] < 0) fail_with(xr, exact_witness(k, i, xrk[i], "[z^i] x_k R(x_k) >= 0"));
    }
  }
  return {res, xr};
}

std::vector<Certificate> check_lemma_nonneg(int p, int m, std::size_t k_max, std::size_t order) {
  return check_lemma_nonneg(pseries::schroeder_coeff_table(p, m, k_max, order));
}

Certificate check_a_recursion(int p, int m, std::size_t order) {
  auto cert = make_cert("lemma.a_recursion", {{"p", p}, {"m", m}, {"order", order}},
                        "0 <= i <= " + std::to_string(order));
  const auto direct = pseries::a_coeffs_direct(p, m, order);
  const auto recursive = pseries::a_coeffs_recursive(p, m, order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (direct[i] != recursive[i]) {
      auto w = exact_witness(std::nullopt, i, recursive[i], "recursive a_i = direct a_i");
      w["direct"] = to_string(direct[i]);
      fail_with(cert, w);
    }
  }
  return cert;
}

Certificate check_binomial_signs(int p, std::size_t order) {
  const std::string range = "0 <= i <= " + std::to_string(order);
  auto binom = make_cert("series.binomial_signs", {{"p", p}, {"order", order}}, range);
  const auto b = pseries::binomial_coeffs(p, order);
  const auto s = pseries::tail_sums(b);
  if (b[0] != 1) fail_with(binom, exact_witness(std::nullopt, 0, b[0], "b_0 = 1"));
  for (std::size_t i = 1; i <= order; ++i)
    if (b[i] >= 0) fail_with(binom, exact_witness(std::nullopt, i, b[i], "b_i < 0"));
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] <= 0 || s[j] > 1) fail_with(binom, exact_witness(std::nullopt, j + 1, s[j], "0 < s_k <= 1"));
    if (j > 0 && s[j] >= s[j - 1]) fail_with(binom, exact_witness(std::nullopt, j + 1, s[j], "s_k < s_{k-1}"));
  }
  return binom;
}

std::vector<Certificate> check_coefficient_families(int p, int m, std::size_t order) {
  const nlohmann::json params{{"p", p}, {"m", m}, {"order", order}};
  const std::string range = "0 <= i <= " + std::to_string(order);
  const auto mm = static_cast<std::size_t>(m);

  auto a_cert = make_cert("series.a_pattern", params, range);
  const auto a = pseries::a_coeffs_direct(p, m, order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] <= 0) fail_with(a_cert, exact_witness(std::nullopt, i, a[i], "a_i > 0"));
    if (i <= mm && a[i] != 1) fail_with(a_cert, exact_witness(std::nullopt, i, a[i], "a_i = 1 for i <= m"));
  }

  auto f_cert = make_cert("lemma.f_sign", params, range);
  const auto c = pseries::f_coeffs(p, m, order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (i <= mm && c[i] != 0) fail_with(f_cert, exact_witness(std::nullopt, i, c[i], "c_i = 0 for i <= m"));
    if (i > mm && c[i] <= 0) fail_with(f_cert, exact_witness(std::nullopt, i, c[i], "c_i > 0 for i > m"));
  }

  auto g_cert = make_cert("lemma.g_positive", params, range);
  const auto d = pseries::g_coeffs(p, m, order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (i <= mm && d[i] != 0) fail_with(g_cert, exact_witness(std::nullopt, i, d[i], "d_i = 0 for i <= m"));
    if (i > mm && d[i] <= 0) fail_with(g_cert, exact_witness(std::nullopt, i, d[i], "d_i > 0 for i > m"));
  }
  return {a_cert, f_cert, g_cert};
}

Certificate check_row_difference(const CoeffTable& t) {
  auto cert = make_cert("lemma.row_difference", series_params(t.p, t.m, t.k_max(), t.order),
                        std::to_string(t.m + 1) + " <= i <= " + std::to_string(t.order));
  if (t.k_max() < 2) {
    cert.verdict = Verdict::skipped;
    return cert;
  }
  const auto b = pseries::binomial_coeffs(t.p, 1);
  const auto d = pseries::g_coeffs(t.p, t.m, t.order);
  const Rational neg_b1 = -b[1];
  for (std::size_t i = static_cast<std::size_t>(t.m) + 1; i <= t.order; ++i) {
    const Rational e = t.rows[1][i] - t.rows[2][i];
    const Rational lower = d[i] * neg_b1;
    if (e < lower || e <= 0) {
      auto w = exact_witness(std::nullopt, i, e, "e_i >= d_i (-b_1) > 0");
      w["lower"] = to_string(lower);
      fail_with(cert, w);
    }
  }
  return cert;
}

std::vector<Certificate> check_series_cell(int p, int m, std::size_t k_max, std::size_t order) {
  const auto table = pseries::schroeder_coeff_table(p, m, k_max, order);
  auto certs = check_sign_pattern(table);
  for (auto& c : check_lemma_nonneg(table)) certs.push_back(std::move(c));
  certs.push_back(check_a_recursion(p, m, order));
  for (auto& c : check_coefficient_families(p, m, order)) certs.push_back(std::move(c));
  certs.push_back(check_row_difference(table));
  return certs;
}

namespace {

struct MatrixCell {
  Certificate bound_plain, bound_sharp, convergence, monotone, m1, h1;
  int samples = 0;
  int bound_samples = 0;
};

MatrixCell make_matrix_cell(const nlohmann::json& params, const std::string& range, EnsembleKind kind) {
  MatrixCell cell{make_cert("matrix.bound_plain", params, range), make_cert("matrix.bound_sharp", params, range),
                  make_cert("matrix.convergence", params, range),  make_cert("matrix.monotone", params, range),
                  make_cert("matrix.m1_membership", params, range), make_cert("matrix.h1_membership", params, range)};
  if (kind != EnsembleKind::m1) {
    cell.monotone.verdict = Verdict::skipped;
    cell.m1.verdict = Verdict::skipped;
  }
  if (kind == EnsembleKind::disk_spectrum) cell.h1.verdict = Verdict::skipped;
  return cell;
}

}  // namespace

std::vector<Certificate> check_matrix_theorems(const CampaignSpec& spec) {
  spec.validate();
  std::vector<Certificate> certs;
  if (spec.samples_per_cell == 0) return certs;

  for (EnsembleKind kind : spec.ensembles) {
    for (long n : spec.matrix_sizes) {
      // Cells for every (p, m), filled sample by sample.
      std::vector<MatrixCell> cells;
      for (int p : spec.p_list)
        for (int m : spec.m_list) {
          const nlohmann::json params{{"ensemble", to_string(kind)}, {"n", n}, {"p", p}, {"m", m},
                                      {"samples", spec.samples_per_cell}, {"seed", spec.seed},
                                      {"rho_min", spec.rho_min}, {"rho_max", spec.rho_max}};
          cells.push_back(make_matrix_cell(params, "all iterates of " + std::to_string(spec.samples_per_cell) +
                                                       " samples", kind));
        }

      for (int sample = 0; sample < spec.samples_per_cell; ++sample) {
        const std::uint64_t seed = derive_seed(spec.seed, static_cast<std::uint64_t>(kind),
                                               static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(sample));
        std::mt19937_64 rng(seed);
        const double rho = spec.rho_min + (spec.rho_max - spec.rho_min) * std::uniform_real_distribution<double>()(rng);
        std::optional<RealMatrix> a;
        std::string generation_error;
        try {
          a = generate_ensemble(kind, n, rho, seed);
        } catch (const std::exception& e) {
          generation_error = e.what();
        }
        const nlohmann::json sample_id{{"sample", sample}, {"sample_seed", seed}, {"rho_target", rho}};

        std::size_t cell_index = 0;
        for (int p : spec.p_list) {
          std::optional<schroeder::ReferenceRoot<double>> ref;
          if (a && norm(RealMatrix(RealMatrix::Identity(n, n) - *a), NormKind::inf) < 1.0) {
            ref = schroeder::binomial_reference_root(*a, p, 1, spec.reference_tail_target, NormKind::inf);
          }
          for (int m : spec.m_list) {
            MatrixCell& cell = cells[cell_index++];
            if (!a) {
              for (Certificate* c : {&cell.bound_plain, &cell.bound_sharp, &cell.convergence}) {
                c->verdict = Verdict::skipped;
                c->witness = {{"generator_error", generation_error}, {"sample", sample_id}};
              }
              continue;
            }
            ++cell.samples;

            schroeder::SchroederConfig config;
            config.p = p;
            config.m = m;
            config.tol = spec.tol;
            config.max_iter = spec.max_iter;
            config.norm = NormKind::inf;
            config.skip_precheck = true;

            std::vector<RealMatrix> iterates;
            const auto result = schroeder::run<double>(
                *a, config, [&](int, const RealMatrix& x) { iterates.push_back(x); });
            const auto& report = result.report;

            if (report.termination != schroeder::Termination::converged) {
              auto w = sample_id;
              w["termination"] = schroeder::to_string(report.termination);
              w["final_residual"] = report.last().residual_norm;
              fail_with(cell.convergence, w);
            }

            if (ref && report.bounds_available) {
              ++cell.bound_samples;
              for (const auto& step : report.steps) {
                const auto& x = iterates[static_cast<std::size_t>(step.k)];
                const double err = norm(RealMatrix(x - ref->root), NormKind::inf);
                const double slack = ref->tail_bound + spec.bound_slack;
                if (!(err <= *step.bound_plain + slack)) {
                  auto w = sample_id;
                  w.update({{"k", step.k}, {"error", err}, {"bound", *step.bound_plain}, {"slack", slack}});
                  fail_with(cell.bound_plain, w);
                }
                if (!(err <= *step.bound_sharp + slack)) {
                  auto w = sample_id;
                  w.update({{"k", step.k}, {"error", err}, {"bound", *step.bound_sharp}, {"slack", slack}});
                  fail_with(cell.bound_sharp, w);
                }
              }
            }

            if (kind != EnsembleKind::disk_spectrum) {
              for (std::size_t k = 0; k < iterates.size(); ++k) {
                const auto& x = iterates[k];
                const auto structure = classify(x);
                if (kind == EnsembleKind::m1 && !structure.is_M1) {
                  auto w = sample_id;
                  w.update({{"k", k}, {"structure", to_json(structure)}});
                  fail_with(cell.m1, w);
                }
                if (!structure.is_H1) {
                  auto w = sample_id;
                  w.update({{"k", k}, {"structure", to_json(structure)}});
                  fail_with(cell.h1, w);
                }
                if (kind == EnsembleKind::m1 && k + 1 < iterates.size()) {
                  const double scale = max_norm(x);
                  const RealMatrix next = iterates[k + 1] / scale;
                  const RealMatrix cur = x / scale;
                  if (!entrywise_leq(next, cur, spec.monotone_tol)) {
                    Eigen::Index r = 0, c = 0;
                    const double worst = (next - cur).maxCoeff(&r, &c);
                    auto w = sample_id;
                    w.update({{"k", k + 1}, {"row", r}, {"col", c}, {"excess", worst}, {"tol", spec.monotone_tol}});
                    fail_with(cell.monotone, w);
                  }
                }
              }
            }
          }
        }
      }

      for (auto& cell : cells) {
        if (cell.bound_samples == 0) {
          cell.bound_plain.verdict = cell.bound_sharp.verdict = Verdict::skipped;
        }
        for (Certificate* c : {&cell.bound_plain, &cell.bound_sharp, &cell.convergence, &cell.monotone, &cell.m1,
                               &cell.h1}) {
          c->details = {{"samples_run", cell.samples}, {"samples_with_bounds", cell.bound_samples}};
          certs.push_back(std::move(*c));
        }
      }
    }
  }
  return certs;
}

std::vector<Certificate> run_campaign(const CampaignSpec& spec) {
  spec.validate();
  std::vector<Certificate> certs;
  if (spec.series_checks) {
    for (int p : spec.p_list)
      for (int m : spec.m_list)
        for (auto& c : check_series_cell(p, m, spec.k_max, spec.order)) certs.push_back(std::move(c));
  }
  if (spec.series_checks) {
    for (int p : spec.p_list) certs.push_back(check_binomial_signs(p, spec.order));
  }
  if (spec.include_control) {
    for (int p : spec.p_list) certs.push_back(check_pade10_control(p, spec.control_order));
  }
  for (auto& c : check_matrix_theorems(spec)) certs.push_back(std::move(c));
  sort_certificates(certs);
  return certs;
}

}  // namespace matroot::verify
