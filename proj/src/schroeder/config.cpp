#include "matroot/schroeder/config.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matroot/pseries/coefficients.hpp"

namespace matroot::schroeder {

void SchroederConfig::validate() const {
  pseries::require_valid_pm(p, m);
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!(divergence_factor > 1.0)) throw std::invalid_argument("divergence_factor must exceed 1");
}

std::span<const double> taylor_coeffs_f64(int p, int m) {
  pseries::require_valid_pm(p, m);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<double>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({p, m});
  if (it == cache.end()) {
    const auto b = pseries::binomial_coeffs(p, static_cast<std::size_t>(m));
    std::vector<double> rounded;
    for (const auto& c : b.coeffs()) rounded.push_back(to_double(c));
    it = cache.emplace(std::make_pair(p, m), std::move(rounded)).first;
  }
  return it->second;
}

}  // namespace matroot::schroeder
