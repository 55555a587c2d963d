#pragma once

#include <algorithm>
#include <functional>
#include <string>

#include "matroot/densela/lu.hpp"
#include "matroot/densela/spectral.hpp"
#include "matroot/schroeder/bounds.hpp"
#include "matroot/schroeder/config.hpp"
#include "matroot/schroeder/report.hpp"

namespace matroot::schroeder {

/// T_m(R) = sum_{i=0}^m b_i R^i by Horner's rule (m products).
template <typename Scalar>
DenseMatrix<Scalar> eval_Tm(const DenseMatrix<Scalar>& r, int p, int m) {
  require_square(r);
  const auto b = taylor_coeffs_f64(p, m);
  DenseMatrix<Scalar> t = DenseMatrix<Scalar>::Zero(r.rows(), r.cols());
  t.diagonal().setConstant(Scalar(b[static_cast<std::size_t>(m)]));
  for (int j = m - 1; j >= 0; --j) {
    t = matmul(t, r);
    t.diagonal().array() += Scalar(b[static_cast<std::size_t>(j)]);
  }
  return t;
}

/// R(X) = I - A X^{-p}: X is factored once and A is divided on the right p
/// times, so X^{-p} is never formed. Throws SingularMatrixError.
template <typename Scalar>
DenseMatrix<Scalar> residual(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& x, int p) {
  require_square(a);
  if (x.rows() != a.rows() || x.cols() != a.cols()) throw std::invalid_argument("residual: shape mismatch");
  const LuDecomposition<Scalar> lu(x);
  DenseMatrix<Scalar> y = a;
  for (int j = 0; j < p; ++j) y = lu.solve_right(y);
  return identity<Scalar>(a.rows()) - y;
}

/// X_{k+1} = X_k T_m(R(X_k)), formed as T_m(R) X_k. The two agree while X_k
/// commutes with A; with R = I - A X^{-p} only the left product keeps the
/// rounding errors from being amplified once the residual is small.
template <typename Scalar>
DenseMatrix<Scalar> step(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& x, int p, int m) {
  return matmul(eval_Tm(residual(a, x, p), p, m), x);
}

template <typename Scalar>
struct RunResult {
  DenseMatrix<Scalar> root;
  IterationReport report;
};

/// Called with (k, X_k) for every iterate, X_0 = I included.
template <typename Scalar>
using IterateObserver = std::function<void(int, const DenseMatrix<Scalar>&)>;

template <typename Scalar>
Precheck precheck(const DenseMatrix<Scalar>& a) {
  const DenseMatrix<Scalar> b = identity<Scalar>(a.rows()) - a;
  Precheck pre;
  pre.performed = true;
  pre.normB_one = norm(b, NormKind::one);
  pre.normB_inf = norm(b, NormKind::inf);
  pre.gershgorin_ok = gershgorin_inside_unit_disk(a);
  const auto rho = spectral_radius_detail(b);
  pre.rho_estimate = rho.value;
  pre.rho_method = rho.method;
  if (!pre.gershgorin_ok && std::min(pre.normB_one, pre.normB_inf) >= 1.0) {
    pre.warning = "spectrum of A is not certified inside |z - 1| < 1 (Gershgorin and ||I - A||_1, ||I - A||_inf "
                  "all fail); iterating with the divergence guard armed";
  }
  return pre;
}

/// Schroeder iteration from X_0 = I. Stops when ||R(X_k)|| <= tol, after
/// max_iter steps, on divergence, or on a singular iterate; the report keeps
/// every step taken up to that point.
template <typename Scalar>
RunResult<Scalar> run(const DenseMatrix<Scalar>& a, const SchroederConfig& config,
                      const IterateObserver<Scalar>& observe = {}) {
  config.validate();
  require_square(a, "A");
  const Eigen::Index n = a.rows();

  RunResult<Scalar> result{identity<Scalar>(n), {}};
  IterationReport& report = result.report;
  report.p = config.p;
  report.m = config.m;
  report.norm = to_string(config.norm);
  report.normB = norm(DenseMatrix<Scalar>(identity<Scalar>(n) - a), config.norm);
  report.bounds_available = report.normB < 1.0;
  if (!config.skip_precheck) report.precheck = precheck(a);

  DenseMatrix<Scalar>& x = result.root;
  double r0 = 0.0;
  double delta = 0.0;
  for (int k = 0;; ++k) {
    if (observe) observe(k, x);

    DenseMatrix<Scalar> r;
    try {
      r = residual(a, x, config.p);
    } catch (const SingularMatrixError& e) {
      report.termination = Termination::singular_iterate;
      report.message = "X_" + std::to_string(k) + " is singular: " + e.what();
      break;
    }

    StepRecord rec;
    rec.k = k;
    rec.residual_norm = norm(r, config.norm);
    rec.delta_norm = delta;
    if (report.bounds_available) {
      const auto bounds = apriori_bounds(report.normB, config.p, config.m, k);
      rec.bound_plain = bounds.plain;
      rec.bound_sharp = bounds.sharp;
    }
    report.steps.push_back(rec);

    if (!std::isfinite(rec.residual_norm) || !all_finite(x)) {
      report.termination = Termination::diverged;
      report.message = "non-finite iterate at k = " + std::to_string(k);
      break;
    }
    if (k == 0) r0 = rec.residual_norm;
    if (rec.residual_norm <= config.tol) {
      report.termination = Termination::converged;
      report.message = "converged in " + std::to_string(k) + " steps";
      break;
    }
    if (k > 0 && rec.residual_norm > config.divergence_factor * r0) {
      report.termination = Termination::diverged;
      report.message = "residual grew past divergence_factor * ||R(X_0)|| at k = " + std::to_string(k);
      break;
    }
    if (k >= config.max_iter) {
      report.termination = Termination::max_iter;
      report.message = "max_iter reached with residual " + std::to_string(rec.residual_norm);
      break;
    }

    DenseMatrix<Scalar> next = matmul(eval_Tm(r, config.p, config.m), x);
    delta = norm(DenseMatrix<Scalar>(next - x), config.norm);
    x = std::move(next);
  }
  return result;
}

}  // namespace matroot::schroeder
