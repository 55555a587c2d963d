#include <doctest.h>

#include <random>

#include <Eigen/Dense>

#include "matroot/densela/dense.hpp"
#include "matroot/densela/lu.hpp"
#include "matroot/densela/spectral.hpp"
#include "matroot/densela/structure.hpp"

using namespace matroot;

namespace {

RealMatrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  RealMatrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) a(i, j++) = v;
    ++i;
  }
  return a;
}

RealMatrix random_matrix(std::mt19937_64& rng, Eigen::Index n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  RealMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = u(rng);
  return a;
}

/// Random B >= 0 with every row sum equal to r.
RealMatrix nonneg_rows(std::mt19937_64& rng, Eigen::Index n, double r) {
  RealMatrix b = random_matrix(rng, n, 0.0, 1.0);
  for (Eigen::Index i = 0; i < n; ++i) b.row(i) *= r / b.row(i).sum();
  return b;
}

double cond1(const RealMatrix& a) { return norm(a, NormKind::one) * norm(RealMatrix(a.inverse()), NormKind::one); }

}  // namespace

TEST_CASE("matmul examples") {
  std::mt19937_64 rng(1);
  const RealMatrix b = random_matrix(rng, 4);
  CHECK(matmul(identity<double>(4), b) == b);
  CHECK(matmul(mat({{1, 1}, {0, 1}}), mat({{1, 1}, {0, 1}})) == mat({{1, 2}, {0, 1}}));

  // A = Q D Q^T with orthogonal Q, so A^{-1} = Q D^{-1} Q^T.
  const double c = std::cos(0.3), s = std::sin(0.3);
  const RealMatrix q = mat({{c, -s}, {s, c}});
  const RealMatrix a = q * mat({{2, 0}, {0, 5}}) * q.transpose();
  const RealMatrix ainv = q * mat({{0.5, 0}, {0, 0.2}}) * q.transpose();
  CHECK(max_norm(RealMatrix(matmul(a, ainv) - identity<double>(2))) <= 1e-13);

  CHECK_THROWS_AS(matmul(RealMatrix(2, 3), RealMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("lu_solve examples") {
  std::mt19937_64 rng(2);
  const RealMatrix b = random_matrix(rng, 3);
  CHECK(lu_solve(identity<double>(3), b) == b);
  CHECK(lu_solve(mat({{2, 0}, {0, 4}}), identity<double>(2)) == mat({{0.5, 0}, {0, 0.25}}));

  RealMatrix a = random_matrix(rng, 6);
  a.diagonal().array() += 6.0;
  const RealMatrix x0 = random_matrix(rng, 6, -1, 1);
  const RealMatrix x = lu_solve(a, RealMatrix(a * x0));
  CHECK(max_norm(RealMatrix(x - x0)) <= 1e-11 * max_norm(x0));
}

TEST_CASE("lu_solve flags singular matrices") {
  CHECK_THROWS_AS(lu_solve(mat({{1, 2}, {2, 4}}), identity<double>(2)), SingularMatrixError);
  CHECK_THROWS_AS(lu_solve(RealMatrix(RealMatrix::Zero(3, 3)), identity<double>(3)), SingularMatrixError);
  CHECK_THROWS_AS(lu_solve(mat({{1, 0}, {0, 1e-15}}), identity<double>(2)), SingularMatrixError);
  CHECK_NOTHROW(lu_solve(mat({{1, 0}, {0, 1e-13}}), identity<double>(2)));
  CHECK_THROWS_AS(lu_solve(identity<double>(2), identity<double>(3)), std::invalid_argument);
}

TEST_CASE("lu residual on random instances with cond <= 1e6") {
  std::mt19937_64 rng(3);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = 1 + trial % 25;
    const RealMatrix a = random_matrix(rng, n);
    if (cond1(a) > 1e6) continue;
    const RealMatrix rhs = random_matrix(rng, n);
    const RealMatrix x = lu_solve(a, rhs);
    CHECK(max_norm(RealMatrix(a * x - rhs)) <= 1e-10 * max_norm(a) * max_norm(x));
    const RealMatrix y = LuDecomposition<double>(a).solve_right(rhs);
    CHECK(max_norm(RealMatrix(y * a - rhs)) <= 1e-10 * max_norm(a) * max_norm(y));
    ++tested;
  }
  CHECK(tested > 40);
}

TEST_CASE("complex lu") {
  ComplexMatrix a(2, 2);
  a << std::complex<double>(1, 1), 2, 0, std::complex<double>(0, 3);
  const ComplexMatrix x = lu_solve(a, identity<std::complex<double>>(2));
  CHECK(max_norm(ComplexMatrix(a * x - identity<std::complex<double>>(2))) <= 1e-15);
}

TEST_CASE("inverse and mat_int_pow") {
  std::mt19937_64 rng(4);
  const RealMatrix a = random_matrix(rng, 3);
  CHECK(mat_int_pow(a, 0) == identity<double>(3));
  CHECK(mat_int_pow(mat({{2}}), -2) == mat({{0.25}}));
  CHECK(max_norm(RealMatrix(mat_int_pow(a, 3) - a * a * a)) <= 1e-14);

  // Neumann series for (I - B)^{-1}.
  RealMatrix b = random_matrix(rng, 5) * 0.05;
  RealMatrix sum = identity<double>(5), term = identity<double>(5);
  for (int i = 1; i < 40; ++i) {
    term = term * b;
    sum += term;
  }
  CHECK(max_norm(RealMatrix(mat_int_pow(RealMatrix(identity<double>(5) - b), -1) - sum)) <= 1e-12);
  CHECK(max_norm(RealMatrix(inverse(a) * a - identity<double>(3))) <= 1e-12);
  CHECK_THROWS_AS(mat_int_pow(mat({{0, 0}, {0, 1}}), -1), SingularMatrixError);
}

TEST_CASE("norms") {
  CHECK(norm(identity<double>(3), NormKind::one) == 1.0);
  CHECK(norm(mat({{0, 0.5}, {0.5, 0}}), NormKind::inf) == 0.5);
  CHECK(norm(mat({{3, 4}}), NormKind::fro) == 5.0);
  CHECK(norm(mat({{1, -2}, {3, 4}}), NormKind::one) == 6.0);
  CHECK(norm(mat({{1, -2}, {3, 4}}), NormKind::inf) == 7.0);
  CHECK(parse_norm_kind("fro") == NormKind::fro);
  CHECK(to_string(NormKind::one) == "one");
  CHECK_THROWS(parse_norm_kind("two"));
}

TEST_CASE("spectral radius estimates") {
  CHECK(spectral_radius_estimate(mat({{0.3, 0}, {0, 0.7}})) == doctest::Approx(0.7).epsilon(1e-8));
  CHECK(spectral_radius_estimate(mat({{0, 0.5}, {0.5, 0}})) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(spectral_radius_estimate(RealMatrix(RealMatrix::Zero(3, 3))) == 0.0);

  const auto certified = spectral_radius_detail(mat({{0, 0.5}, {0.5, 0}}));
  CHECK(certified.certified);
  const auto rotation = spectral_radius_detail(mat({{0, -0.5}, {0.5, 0}}));
  CHECK_FALSE(rotation.certified);
  CHECK(rotation.value == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("Collatz-Wielandt value bounds rho from above for B >= 0") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 2 + trial % 15;
    const RealMatrix b = random_matrix(rng, n, 0.0, 1.0) / static_cast<double>(n);
    const auto est = spectral_radius_detail(b);
    const double rho = b.eigenvalues().cwiseAbs().maxCoeff();
    CHECK(est.certified);
    CHECK(est.value >= rho * (1 - 1e-12));
    CHECK(est.value <= rho * (1 + 1e-8));
  }
}

TEST_CASE("gershgorin disk test") {
  CHECK(gershgorin_inside_unit_disk(mat({{1, -0.5}, {-0.5, 1}})));
  CHECK_FALSE(gershgorin_inside_unit_disk(mat({{3.0}})));
  // Rows fail, columns pass.
  CHECK(gershgorin_inside_unit_disk(mat({{1, 0.9, 0.9}, {0, 1, 0}, {0, 0, 1}})));
  CHECK(gershgorin_inside_unit_disk(mat({{1, 0, 0}, {0.45, 1, 0}, {0.45, 0, 1}})));
  CHECK_FALSE(gershgorin_inside_unit_disk(mat({{1, 0.6, 0.6}, {0.6, 1, 0.6}, {0.6, 0.6, 1}})));
}

TEST_CASE("comparison matrix") {
  CHECK(comparison_matrix(identity<double>(3)) == identity<double>(3));
  CHECK(comparison_matrix(mat({{1, 0.5}, {-0.5, 1}})) == mat({{1, -0.5}, {-0.5, 1}}));
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    RealMatrix z = -random_matrix(rng, 4, 0.0, 1.0);
    z.diagonal() = random_matrix(rng, 4, 0.0, 2.0).diagonal();
    CHECK(comparison_matrix(z) == z);
    CHECK(comparison_matrix(comparison_matrix(z)) == comparison_matrix(z));
  }
  CHECK_THROWS_AS(comparison_matrix(ComplexMatrix(identity<std::complex<double>>(2))), std::invalid_argument);
}

TEST_CASE("classify examples") {
  const auto id = classify(identity<double>(3));
  CHECK(id.is_M1);
  CHECK(id.is_H1);
  CHECK(id.is_Z);

  const auto m1 = classify(mat({{1, -0.5}, {-0.5, 1}}));
  CHECK(m1.is_M1);
  CHECK(m1.rho_estimate == doctest::Approx(0.5).epsilon(1e-8));

  const auto h1 = classify(mat({{1, 0.5}, {-0.5, 1}}));
  CHECK_FALSE(h1.is_Z);
  CHECK_FALSE(h1.is_M1);
  CHECK(h1.is_H1);

  const auto big = classify(mat({{2, 0}, {0, 2}}));
  CHECK_FALSE(big.is_M1);
  CHECK_FALSE(big.is_H1);
  CHECK(big.diag_range.second == 2.0);

  const auto singular = classify(mat({{1, -1}, {-1, 1}}));
  CHECK(singular.is_Z);
  CHECK_FALSE(singular.is_M1);

  const auto cx = classify(ComplexMatrix(identity<std::complex<double>>(2)));
  CHECK_FALSE(cx.is_M1);
  CHECK_FALSE(cx.is_H1);
  CHECK_FALSE(cx.method_note.empty());

  const auto j = to_json(m1);
  CHECK(j["is_M1"] == true);
  CHECK(j.contains("rho_estimate"));
  CHECK(j.contains("method_note"));
}

TEST_CASE("classify on generated I - B with B >= 0") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 1 + trial % 30;
    const double r = 0.05 + 0.9 * (trial % 10) / 10.0;
    const RealMatrix b = nonneg_rows(rng, n, r);
    const RealMatrix a = identity<double>(n) - b;
    const auto rep = classify(a);
    CHECK(rep.is_M1);
    CHECK(rep.is_H1);
    CHECK(rep.rho_estimate <= r + 1e-8);
  }
}

TEST_CASE("is_M1 implies is_H1 on random matrices") {
  std::mt19937_64 rng(8);
  int m1_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + trial % 6;
    RealMatrix a = random_matrix(rng, n, -0.6, 0.3);
    a.diagonal() = random_matrix(rng, n, 0.2, 1.1).diagonal();
    const auto rep = classify(a);
    if (rep.is_M1) {
      ++m1_count;
      CHECK(rep.is_H1);
      CHECK(rep.is_Z);
    }
  }
  CHECK(m1_count > 0);
}

TEST_CASE("entrywise_leq") {
  const RealMatrix a = mat({{1, 2}, {3, 4}});
  CHECK(entrywise_leq(a, a, 0));
  CHECK(entrywise_leq(RealMatrix(RealMatrix::Zero(2, 2)), identity<double>(2), 0));
  CHECK_FALSE(entrywise_leq(identity<double>(2), RealMatrix(RealMatrix::Zero(2, 2)), 0));
  CHECK(entrywise_leq(identity<double>(2), RealMatrix(RealMatrix::Zero(2, 2)), 1.0));
  CHECK_THROWS(entrywise_leq(a, identity<double>(3), 0));
}
