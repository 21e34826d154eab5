#include "gridbayes/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gridbayes {

double logsumexp(std::span<const double> v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) {
    if (std::isnan(x)) throw std::invalid_argument("logsumexp: NaN entry");
    if (x > m) m = x;
  }
  if (std::isinf(m) && m < 0) return m;  // empty or all -inf
  double s = 0.0;
  for (double x : v) {
    if (std::isinf(x) && x < 0) continue;
    s += std::exp(x - m);
  }
  return m + std::log(s);
}

std::vector<double> normalize_log_weights(std::span<const double> raw_log_weights) {
  for (double x : raw_log_weights) {
    if (std::isnan(x)) throw std::invalid_argument("invalid weight: NaN log weight");
    if (std::isinf(x) && x > 0) throw std::invalid_argument("invalid weight: +inf log weight");
  }
  const double lz = logsumexp(raw_log_weights);
  if (std::isinf(lz) && lz < 0) throw std::invalid_argument("degenerate weights: all atoms have zero mass");
  std::vector<double> out(raw_log_weights.begin(), raw_log_weights.end());
  for (double& x : out) x -= lz;
  return out;
}

double total_variation_probs(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("total_variation: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

}  // namespace gridbayes
