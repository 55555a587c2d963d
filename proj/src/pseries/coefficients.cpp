#include "matroot/pseries/coefficients.hpp"

#include <stdexcept>
#include <string>

namespace matroot::pseries {

void require_valid_pm(int p, int m) {
  if (p < 2) throw std::invalid_argument("p must be >= 2, got " + std::to_string(p));
  if (m < 1) throw std::invalid_argument("m must be >= 1, got " + std::to_string(m));
}

Rational rising_factorial(const Rational& x, std::size_t i) {
  Rational r = 1;
  for (std::size_t j = 0; j < i; ++j) r *= x + static_cast<unsigned long>(j);
  return r;
}

TruncatedSeries binomial_coeffs(int p, std::size_t order) {
  if (p < 2) throw std::invalid_argument("p must be >= 2, got " + std::to_string(p));
  const Rational x = make_rational(-1, p);
  TruncatedSeries b(order);
  b[0] = 1;
  // b_i = b_{i-1} (x + i - 1) / i
  for (std::size_t i = 1; i <= order; ++i) {
    b[i] = b[i - 1] * (x + static_cast<unsigned long>(i - 1)) / static_cast<unsigned long>(i);
  }
  return b;
}

std::vector<Rational> tail_sums(const TruncatedSeries& b) {
  std::vector<Rational> s(b.size());
  Rational acc = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    acc += b[i];
    s[i] = acc;
  }
  return s;
}

Rational tail_sum_product(int p, std::size_t k) {
  if (p < 2) throw std::invalid_argument("p must be >= 2, got " + std::to_string(p));
  if (k == 0) throw std::invalid_argument("tail sums start at k = 1");
  Rational s = 1;
  for (std::size_t j = 1; j < k; ++j) {
    const long pj = static_cast<long>(p) * static_cast<long>(j);
    s *= make_rational(pj - 1, pj);
  }
  return s;
}

TruncatedSeries taylor_polynomial(int p, int m, std::size_t order) {
  require_valid_pm(p, m);
  const auto b = binomial_coeffs(p, static_cast<std::size_t>(m));
  TruncatedSeries t(order);
  for (std::size_t i = 0; i <= std::min<std::size_t>(order, m); ++i) t[i] = b[i];
  return t;
}

TruncatedSeries a_coeffs_direct(int p, int m, std::size_t order) {
  return series_int_pow(taylor_polynomial(p, m, order), -static_cast<long>(p));
}

TruncatedSeries a_coeffs_recursive(int p, int m, std::size_t order) {
  require_valid_pm(p, m);
  const auto b = binomial_coeffs(p, static_cast<std::size_t>(m));
  TruncatedSeries a(order);
  const std::size_t seeds = std::min<std::size_t>(order + 1, m);
  for (std::size_t i = 0; i < seeds; ++i) a[i] = 1;

  // a_{k+1} = 1/(k+1) sum_{s=0}^{m-1} (k - s + p(s+1)) (-b_{s+1}) a_{k-s},  k >= m-1
  Rational acc;
  for (std::size_t k = static_cast<std::size_t>(m - 1); k + 1 <= order; ++k) {
    acc = 0;
    for (std::size_t s = 0; s < static_cast<std::size_t>(m); ++s) {
      const long weight = static_cast<long>(k) - static_cast<long>(s) + p * static_cast<long>(s + 1);
      acc += weight * (-b[s + 1]) * a[k - s];
    }
    a[k + 1] = acc / static_cast<unsigned long>(k + 1);
  }
  return a;
}

TruncatedSeries f_coeffs(int p, int m, std::size_t order) {
  const auto a = a_coeffs_direct(p, m, order);
  TruncatedSeries c(order);
  for (std::size_t i = 1; i <= order; ++i) c[i] = a[i - 1] - a[i];
  return c;
}

TruncatedSeries g_coeffs(int p, int m, std::size_t order) {
  const auto b = binomial_coeffs(p, static_cast<std::size_t>(m));
  const auto c = f_coeffs(p, m, order);
  TruncatedSeries d(order);
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t j = 0; j <= std::min<std::size_t>(i, m); ++j) d[i] += b[j] * c[i - j];
  }
  return d;
}

TruncatedSeries pade10_first_iterate(int p, std::size_t order) {
  if (p < 2) throw std::invalid_argument("p must be >= 2, got " + std::to_string(p));
  TruncatedSeries x(order);
  x[0] = 1;
  const Rational ratio = make_rational(-1, p);
  for (std::size_t i = 1; i <= order; ++i) x[i] = x[i - 1] * ratio;
  return x;
}

}  // namespace matroot::pseries
