#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridbayes {

// Finite set of parameter (or action) atoms. Atoms are real vectors of a
// common dimension; order is significant because distributions and loss
// vectors index into it.
struct ParamGrid {
  std::vector<Eigen::VectorXd> atoms;
  std::vector<std::string> labels;  // optional; empty or one per atom

  static ParamGrid scalar(const std::vector<double>& points);

  std::size_t size() const { return atoms.size(); }
  std::size_t dim() const { return atoms.empty() ? 0 : static_cast<std::size_t>(atoms.front().size()); }

  // Throws std::invalid_argument on: no atoms, mixed dimensions, duplicate
  // atoms (exact coordinate comparison), or a label count mismatch.
  void validate() const;

  bool operator==(const ParamGrid& other) const;
};

// Cartesian product of two grids; atom (i,j) is the concatenation of
// a.atoms[i] and b.atoms[j], with j varying fastest.
ParamGrid product_grid(const ParamGrid& a, const ParamGrid& b);

// Probability weights on a ParamGrid, stored as natural logs. -inf marks a
// zero-probability atom; such atoms stay in place so grids remain aligned
// across operations.
struct Distribution {
  ParamGrid grid;
  std::vector<double> log_weights;

  static Distribution uniform(ParamGrid grid);
  static Distribution from_probabilities(ParamGrid grid, const std::vector<double>& probs);
  static Distribution point_mass(ParamGrid grid, std::size_t atom);

  std::vector<double> probabilities() const;

  // Throws if any weight is NaN or the probabilities do not sum to 1 within
  // 1e-12 (absolute).
  void validate() const;
};

// One-dimensional simplex tolerance used across the library.
inline constexpr double kSimplexTol = 1e-12;

double total_variation(const Distribution& p, const Distribution& q);

// Ordered data points. Order matters: prequential scoring conditions each
// step on the strict past.
struct Dataset {
  std::vector<Eigen::VectorXd> records;
  int outcome_index = 0;  // component of each record that is scored as y_t

  static Dataset scalars(const std::vector<double>& xs);

  std::size_t size() const { return records.size(); }
  double outcome(std::size_t t) const;
  void validate() const;
};

// Learning rate / temperature coupling loss to the update.
struct Temperature {
  double eta;

  Temperature(double e) : eta(e) {  // intentionally implicit: call sites pass plain numbers
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw std::invalid_argument("Temperature must be finite and > 0, got " + std::to_string(e));
    }
  }
};

// Quadrature rule on the sample space: nodes x_j with strictly positive
// weights. `exact` marks counting measures (finite discrete sample spaces)
// whose "quadrature" has no discretization error; the Bayesianity diagnostic
// skips the half-resolution error estimate for those.
struct SampleGrid {
  std::vector<Eigen::VectorXd> nodes;
  std::vector<double> quad_weights;
  bool exact = false;

  static SampleGrid trapezoid(double lo, double hi, double step);
  static SampleGrid discrete(const std::vector<double>& points);

  std::size_t size() const { return nodes.size(); }
  void validate() const;
};

// Per-datum loss oracle l(theta; x) with optional derivatives in theta
// (needed by calibration; evaluated at arbitrary theta, not only grid atoms)
// and an optional data-only term c(x). The represented loss is
// eval(theta,x) + shift(x); keeping c(x) out of `eval` lets downstream code
// carry it symbolically, so "data-only shifts do not move the posterior"
// holds exactly and not merely to rounding.
struct LossModel {
  std::function<double(const Eigen::VectorXd& theta, const Eigen::VectorXd& x)> eval;
  std::function<Eigen::VectorXd(const Eigen::VectorXd& theta, const Eigen::VectorXd& x)> grad;   // optional
  std::function<Eigen::MatrixXd(const Eigen::VectorXd& theta, const Eigen::VectorXd& x)> hess;   // optional
  std::function<double(const Eigen::VectorXd& x)> shift;                                         // optional c(x)

  double shift_at(const Eigen::VectorXd& x) const { return shift ? shift(x) : 0.0; }
};

}  // namespace gridbayes
