#include "gridbayes/types.hpp"

#include <cmath>
#include <limits>

#include "gridbayes/simplex.hpp"

namespace gridbayes {

ParamGrid ParamGrid::scalar(const std::vector<double>& points) {
  ParamGrid g;
  g.atoms.reserve(points.size());
  for (double p : points) {
    Eigen::VectorXd v(1);
    v << p;
    g.atoms.push_back(std::move(v));
  }
  g.validate();
  return g;
}

void ParamGrid::validate() const {
  if (atoms.empty()) throw std::invalid_argument("ParamGrid: needs at least one atom");
  const auto d = atoms.front().size();
  for (const auto& a : atoms) {
    if (a.size() != d) throw std::invalid_argument("ParamGrid: atoms have mixed dimensions");
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[i] == atoms[j]) {
        throw std::invalid_argument("ParamGrid: duplicate atoms at indices " + std::to_string(i) +
                                    " and " + std::to_string(j));
      }
    }
  }
  if (!labels.empty() && labels.size() != atoms.size()) {
    throw std::invalid_argument("ParamGrid: label count does not match atom count");
  }
}

bool ParamGrid::operator==(const ParamGrid& other) const {
  if (atoms.size() != other.atoms.size()) return false;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].size() != other.atoms[i].size() || atoms[i] != other.atoms[i]) return false;
  }
  return true;
}

ParamGrid product_grid(const ParamGrid& a, const ParamGrid& b) {
  a.validate();
  b.validate();
  ParamGrid out;
  out.atoms.reserve(a.size() * b.size());
  for (const auto& x : a.atoms) {
    for (const auto& y : b.atoms) {
      Eigen::VectorXd v(x.size() + y.size());
      v << x, y;
      out.atoms.push_back(std::move(v));
    }
  }
  return out;
}

Distribution Distribution::uniform(ParamGrid grid) {
  grid.validate();
  const double lw = -std::log(static_cast<double>(grid.size()));
  Distribution d{std::move(grid), {}};
  d.log_weights.assign(d.grid.size(), lw);
  return d;
}

Distribution Distribution::from_probabilities(ParamGrid grid, const std::vector<double>& probs) {
  grid.validate();
  if (probs.size() != grid.size()) throw std::invalid_argument("Distribution: probability count mismatch");
  Distribution d{std::move(grid), {}};
  d.log_weights.reserve(probs.size());
  for (double p : probs) {
    if (std::isnan(p) || p < 0.0) throw std::invalid_argument("Distribution: negative or NaN probability");
    d.log_weights.push_back(p == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(p));
  }
  d.validate();
  return d;
}

Distribution Distribution::point_mass(ParamGrid grid, std::size_t atom) {
  grid.validate();
  if (atom >= grid.size()) throw std::invalid_argument("Distribution: point mass atom out of range");
  Distribution d{std::move(grid), {}};
  d.log_weights.assign(d.grid.size(), -std::numeric_limits<double>::infinity());
  d.log_weights[atom] = 0.0;
  return d;
}

std::vector<double> Distribution::probabilities() const {
  std::vector<double> p(log_weights.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::exp(log_weights[i]);
  return p;
}

void Distribution::validate() const {
  grid.validate();
  if (log_weights.size() != grid.size()) throw std::invalid_argument("Distribution: weight count mismatch");
  double sum = 0.0;
  for (double lw : log_weights) {
    if (std::isnan(lw)) throw std::invalid_argument("Distribution: NaN log weight");
    if (std::isinf(lw) && lw > 0) throw std::invalid_argument("Distribution: +inf log weight");
    sum += std::exp(lw);
  }
  if (std::abs(sum - 1.0) > kSimplexTol) {
    throw std::invalid_argument("Distribution: probabilities sum to " + std::to_string(sum) +
                                ", outside simplex tolerance");
  }
}

double total_variation(const Distribution& p, const Distribution& q) {
  if (!(p.grid == q.grid)) throw std::invalid_argument("total_variation: distributions live on different grids");
  const auto pp = p.probabilities();
  const auto qq = q.probabilities();
  return total_variation_probs(pp, qq);
}

Dataset Dataset::scalars(const std::vector<double>& xs) {
  Dataset d;
  d.records.reserve(xs.size());
  for (double x : xs) {
    Eigen::VectorXd v(1);
    v << x;
    d.records.push_back(std::move(v));
  }
  return d;
}

double Dataset::outcome(std::size_t t) const {
  if (t >= records.size()) throw std::out_of_range("Dataset: record index out of range");
  const auto& r = records[t];
  if (outcome_index < 0 || outcome_index >= r.size()) {
    throw std::invalid_argument("Dataset: outcome_index out of range for record");
  }
  return r(outcome_index);
}

void Dataset::validate() const {
  if (records.empty()) return;
  const auto d = records.front().size();
  for (const auto& r : records) {
    if (r.size() != d) throw std::invalid_argument("Dataset: records have mixed dimensions");
    if (!r.allFinite()) throw std::invalid_argument("Dataset: non-finite record");
  }
  if (outcome_index < 0 || outcome_index >= d) {
    throw std::invalid_argument("Dataset: outcome_index out of range");
  }
}

SampleGrid SampleGrid::trapezoid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi > lo)) throw std::invalid_argument("SampleGrid::trapezoid: need hi > lo and step > 0");
  SampleGrid g;
  const auto n = static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
  if (n < 2) throw std::invalid_argument("SampleGrid::trapezoid: fewer than two nodes");
  g.nodes.reserve(n);
  g.quad_weights.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Eigen::VectorXd v(1);
    v << lo + step * static_cast<double>(j);
    g.nodes.push_back(std::move(v));
    const bool edge = (j == 0 || j + 1 == n);
    g.quad_weights.push_back(edge ? 0.5 * step : step);
  }
  return g;
}

SampleGrid SampleGrid::discrete(const std::vector<double>& points) {
  SampleGrid g;
  g.exact = true;
  g.nodes.reserve(points.size());
  for (double p : points) {
    Eigen::VectorXd v(1);
    v << p;
    g.nodes.push_back(std::move(v));
  }
  g.quad_weights.assign(points.size(), 1.0);
  return g;
}

void SampleGrid::validate() const {
  if (nodes.empty()) throw std::invalid_argument("SampleGrid: empty");
  if (nodes.size() != quad_weights.size()) throw std::invalid_argument("SampleGrid: weight count mismatch");
  for (double w : quad_weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("SampleGrid: weights must be finite and > 0");
  }
}

}  // namespace gridbayes
