#include "matroot/pseries/iterates.hpp"

#include <stdexcept>

#include "matroot/pseries/coefficients.hpp"

namespace matroot::pseries {

namespace {

void require_unit_constant(const TruncatedSeries& x) {
  if (x[0] != 1) throw std::invalid_argument("Schroeder iterate series must have constant term 1");
}

TruncatedSeries one_minus_z(std::size_t order) {
  TruncatedSeries s = TruncatedSeries::constant(1, order);
  if (order >= 1) s[1] = -1;
  return s;
}

TruncatedSeries step_with(const TruncatedSeries& x, int p, std::span<const Rational> tm) {
  const auto r = residual_series(x, p);
  return series_mul(x, series_horner(tm, r));
}

}  // namespace

TruncatedSeries residual_series(const TruncatedSeries& x, int p) {
  require_unit_constant(x);
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  auto r = -series_mul(one_minus_z(x.order()), series_int_pow(x, -static_cast<long>(p)));
  r[0] += 1;
  return r;
}

TruncatedSeries xr_series(const TruncatedSeries& x, int p) {
  return series_mul(x, residual_series(x, p));
}

TruncatedSeries schroeder_step_series(const TruncatedSeries& x, int p, int m) {
  require_valid_pm(p, m);
  const auto b = binomial_coeffs(p, static_cast<std::size_t>(m));
  return step_with(x, p, b.coeffs());
}

CoeffTable schroeder_coeff_table(int p, int m, std::size_t k_max, std::size_t order) {
  require_valid_pm(p, m);
  const auto b = binomial_coeffs(p, static_cast<std::size_t>(m));

  CoeffTable table{p, m, order, {}};
  table.rows.reserve(k_max + 1);
  table.rows.push_back(TruncatedSeries::constant(1, order));
  for (std::size_t k = 1; k <= k_max; ++k) table.rows.push_back(step_with(table.rows.back(), p, b.coeffs()));
  return table;
}

}  // namespace matroot::pseries
