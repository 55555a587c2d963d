#include "matroot/pseries/series.hpp"

#include <stdexcept>
#include <string>

namespace matroot::pseries {

namespace {

// Scales a series to integer numerators over the lcm of its denominators.
BigInt to_common_denominator(const TruncatedSeries& u, std::vector<BigInt>& numerators) {
  BigInt den = 1;
  for (const auto& c : u.coeffs()) {
    if (c != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  numerators.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) {
      numerators[i] = 0;
      continue;
    }
    mpz_divexact(numerators[i].get_mpz_t(), den.get_mpz_t(), u[i].get_den_mpz_t());
    numerators[i] *= u[i].get_num();
  }
  return den;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Rational> coeffs)
    : TruncatedSeries(std::vector<Rational>(coeffs)) {}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, std::size_t power, std::size_t order) {
  TruncatedSeries s(order);
  if (power <= order) s[power] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot raise the order of a truncated series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

void require_same_order(const TruncatedSeries& u, const TruncatedSeries& v) {
  if (u.order() != v.order()) {
    throw std::invalid_argument("series order mismatch: " + std::to_string(u.order()) + " vs " +
                                std::to_string(v.order()));
  }
}

TruncatedSeries operator+(const TruncatedSeries& u, const TruncatedSeries& v) {
  require_same_order(u, v);
  TruncatedSeries w(u.order());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
  return w;
}

TruncatedSeries operator-(const TruncatedSeries& u, const TruncatedSeries& v) {
  require_same_order(u, v);
  TruncatedSeries w(u.order());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
  return w;
}

TruncatedSeries operator-(const TruncatedSeries& u) {
  TruncatedSeries w(u.order());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = -u[i];
  return w;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& u) {
  TruncatedSeries w(u.order());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = c * u[i];
  return w;
}

TruncatedSeries series_mul(const TruncatedSeries& u, const TruncatedSeries& v) {
  require_same_order(u, v);
  const std::size_t n = u.size();

  // Convolve integer numerators over a common denominator and reduce once per
  // coefficient at the end; this avoids a gcd per term.
  std::vector<BigInt> un, vn;
  const BigInt du = to_common_denominator(u, un);
  const BigInt dv = to_common_denominator(v, vn);
  const BigInt den = du * dv;

  std::size_t last_u = 0, last_v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (un[i] != 0) last_u = i;
    if (vn[i] != 0) last_v = i;
  }

  TruncatedSeries w(u.order());
  BigInt acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc = 0;
    const std::size_t jmax = std::min(i, last_u);
    for (std::size_t j = (i > last_v ? i - last_v : 0); j <= jmax; ++j) {
      if (un[j] == 0 || vn[i - j] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), un[j].get_mpz_t(), vn[i - j].get_mpz_t());
    }
    if (acc != 0) w[i] = make_rational(acc, den);
  }
  return w;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& u) {
  if (u[0] == 0) throw std::domain_error("series reciprocal needs a nonzero constant term");
  const Rational inv0 = 1 / u[0];
  TruncatedSeries w(u.order());
  w[0] = inv0;
  Rational acc, term;
  for (std::size_t i = 1; i < u.size(); ++i) {
    acc = 0;
    for (std::size_t j = 1; j <= i; ++j) {
      if (u[j] == 0 || w[i - j] == 0) continue;
      term = u[j] * w[i - j];
      acc += term;
    }
    w[i] = -inv0 * acc;
  }
  return w;
}

TruncatedSeries series_int_pow(const TruncatedSeries& u, long e) {
  if (e == 0) return TruncatedSeries::constant(1, u.order());
  TruncatedSeries base = e < 0 ? series_reciprocal(u) : u;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);

  TruncatedSeries result = TruncatedSeries::constant(1, u.order());
  bool first = true;
  while (true) {
    if (k & 1UL) {
      result = first ? base : series_mul(result, base);
      first = false;
    }
    k >>= 1;
    if (k == 0) break;
    base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries series_horner(std::span<const Rational> poly, const TruncatedSeries& u) {
  if (poly.empty()) return TruncatedSeries(u.order());
  TruncatedSeries acc = TruncatedSeries::constant(poly.back(), u.order());
  for (std::size_t j = poly.size() - 1; j-- > 0;) {
    acc = series_mul(acc, u);
    acc[0] += poly[j];
  }
  return acc;
}

}  // namespace matroot::pseries
