#include "gridbayes/divergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gridbayes {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DivergenceSpec DivergenceSpec::kl() {
  return {"KL", [](double t) { return t * std::log(t); }, [](double t) { return std::log(t) + 1.0; }, 0.0};
}

DivergenceSpec DivergenceSpec::reverse_kl() {
  return {"reverse-KL", [](double t) { return -std::log(t); }, [](double t) { return -1.0 / t; }, kInf};
}

DivergenceSpec DivergenceSpec::chi_squared() {
  return {"chi-squared", [](double t) { return (t - 1.0) * (t - 1.0); }, [](double t) { return 2.0 * (t - 1.0); },
          1.0};
}

DivergenceSpec DivergenceSpec::squared_hellinger() {
  return {"squared-Hellinger",
          [](double t) {
            const double d = std::sqrt(t) - 1.0;
            return d * d;
          },
          [](double t) { return 1.0 - 1.0 / std::sqrt(t); }, 1.0};
}

DivergenceSpec DivergenceSpec::by_name(const std::string& name) {
  if (name == "KL") return kl();
  if (name == "reverse-KL") return reverse_kl();
  if (name == "chi-squared") return chi_squared();
  if (name == "squared-Hellinger") return squared_hellinger();
  throw std::invalid_argument("unknown divergence: " + name +
                              " (expected KL, reverse-KL, chi-squared, squared-Hellinger)");
}

void DivergenceSpec::validate() const {
  if (!phi || !dphi) throw std::invalid_argument("DivergenceSpec '" + name + "': missing phi or dphi oracle");
  if (std::abs(phi(1.0)) > 1e-15) {
    throw std::invalid_argument("DivergenceSpec '" + name + "': phi(1) != 0");
  }
  // Midpoint convexity on a fixed log-spaced ratio grid.
  constexpr int kPoints = 25;
  double ts[kPoints];
  for (int i = 0; i < kPoints; ++i) {
    ts[i] = std::pow(10.0, -3.0 + 6.0 * static_cast<double>(i) / (kPoints - 1));
  }
  for (int i = 0; i < kPoints; ++i) {
    for (int j = i + 1; j < kPoints; ++j) {
      const double mid = 0.5 * (ts[i] + ts[j]);
      const double lhs = phi(mid);
      const double rhs = 0.5 * (phi(ts[i]) + phi(ts[j]));
      if (lhs > rhs + 1e-12 * (1.0 + std::abs(rhs))) {
        throw std::invalid_argument("DivergenceSpec '" + name + "': phi fails midpoint convexity");
      }
    }
  }
}

double f_divergence(const DivergenceSpec& div, const Distribution& q, const Distribution& pi) {
  if (!(q.grid == pi.grid)) throw std::invalid_argument("f_divergence: distributions on different grids");
  const auto qp = q.probabilities();
  const auto pp = pi.probabilities();
  double sum = 0.0;
  for (std::size_t i = 0; i < qp.size(); ++i) {
    if (pp[i] == 0.0) {
      if (qp[i] > 0.0) return kInf;
      continue;  // 0 * phi(0/0) = 0
    }
    if (qp[i] == 0.0) {
      if (std::isinf(div.phi0)) return kInf;
      sum += pp[i] * div.phi0;
      continue;
    }
    sum += pp[i] * div.phi(qp[i] / pp[i]);
  }
  return sum;
}

double product_additivity_gap(const DivergenceSpec& div, const Distribution& q1, const Distribution& pi1,
                              const Distribution& q2, const Distribution& pi2) {
  const double d1 = f_divergence(div, q1, pi1);
  const double d2 = f_divergence(div, q2, pi2);

  ParamGrid pg = product_grid(q1.grid, q2.grid);
  std::vector<double> qprod, piprod;
  qprod.reserve(pg.size());
  piprod.reserve(pg.size());
  const auto q1p = q1.probabilities();
  const auto q2p = q2.probabilities();
  const auto p1p = pi1.probabilities();
  const auto p2p = pi2.probabilities();
  for (std::size_t i = 0; i < q1p.size(); ++i) {
    for (std::size_t j = 0; j < q2p.size(); ++j) {
      qprod.push_back(q1p[i] * q2p[j]);
      piprod.push_back(p1p[i] * p2p[j]);
    }
  }
  Distribution qd = Distribution::from_probabilities(pg, qprod);
  Distribution pid = Distribution::from_probabilities(pg, piprod);
  return f_divergence(div, qd, pid) - d1 - d2;
}

}  // namespace gridbayes
