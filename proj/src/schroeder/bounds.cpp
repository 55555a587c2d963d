#include "matroot/schroeder/bounds.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "matroot/pseries/coefficients.hpp"

namespace matroot::schroeder {

namespace {

constexpr std::uint64_t kProductLimit = std::uint64_t{1} << 20;

const std::vector<double>& exact_tail_sums(int p) {
  static std::mutex mutex;
  static std::map<int, std::vector<double>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p);
  if (it == cache.end()) {
    const auto b = pseries::binomial_coeffs(p, kExactTailSumLimit - 1);
    const auto s = pseries::tail_sums(b);
    std::vector<double> rounded(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) rounded[i] = to_double(s[i]);
    it = cache.emplace(p, std::move(rounded)).first;
  }
  return it->second;
}

}  // namespace

double tail_sum(int p, std::uint64_t k) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (k == 0) throw std::invalid_argument("tail sums start at k = 1");
  const auto& exact = exact_tail_sums(p);
  if (k <= kExactTailSumLimit) return exact[k - 1];

  const std::uint64_t stop = std::min(k, kProductLimit);
  double s = exact.back();
  for (std::uint64_t j = kExactTailSumLimit; j < stop; ++j) {
    s *= 1.0 - 1.0 / (static_cast<double>(p) * static_cast<double>(j));
  }
  return s;
}

std::vector<double> binomial_coeffs_f64(int p, std::size_t count) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  std::vector<double> b(count);
  if (count == 0) return b;
  b[0] = 1.0;
  double s = 1.0;  // s_i
  for (std::size_t i = 1; i < count; ++i) {
    const double pi = static_cast<double>(p) * static_cast<double>(i);
    b[i] = -s / pi;
    s *= 1.0 - 1.0 / pi;
  }
  return b;
}

AprioriBounds apriori_bounds(double normB, int p, int m, int k) {
  if (!(normB >= 0.0 && normB < 1.0)) throw std::invalid_argument("a-priori bounds need 0 <= ||B|| < 1");
  if (p < 2 || m < 1 || k < 0) throw std::invalid_argument("a-priori bounds need p >= 2, m >= 1, k >= 0");

  // (m+1)^k is tracked exactly while it stays below 2^53; beyond that the
  // plain bound is reached by repeated (m+1)-th powers.
  std::uint64_t exponent = 1;
  int j = 0;
  for (; j < k && exponent <= (std::uint64_t{1} << 53) / static_cast<std::uint64_t>(m + 1); ++j) {
    exponent *= static_cast<std::uint64_t>(m + 1);
  }
  double plain = std::pow(normB, static_cast<double>(exponent));
  for (; j < k; ++j) plain = std::pow(plain, m + 1);
  const double s = tail_sum(p, exponent);
  return {plain, s * plain};
}

}  // namespace matroot::schroeder
