#pragma once

#include <vector>

#include "gridbayes/types.hpp"

namespace gridbayes {

// Per-atom cumulative loss L(theta) plus a data-only offset carried
// symbolically: the represented loss is values[i] + shift. The split exists
// because a data-only shift must leave the posterior exactly unchanged while
// rescaling the normalizer by exp(-eta*c); folding c into the per-atom
// doubles first would smear it across the weights through rounding.
struct LossVector {
  std::vector<double> values;
  double shift = 0.0;

  LossVector() = default;
  LossVector(std::vector<double> v) : values(std::move(v)) {}  // plain vectors convert implicitly
  LossVector(std::vector<double> v, double s) : values(std::move(v)), shift(s) {}

  std::size_t size() const { return values.size(); }

  // The represented losses with the offset folded into the doubles. Loses
  // the exactness of the symbolic channel; used where a plain vector is the
  // point (e.g. demonstrating that the invariances hold approximately
  // without the channel).
  std::vector<double> materialized() const;
};

struct GibbsOptions {
  // +inf losses normally abort (a non-finite loss at a positive-prior atom is
  // a modeling error). Quasi-posteriors opt in: +inf marks an infeasible atom
  // and yields zero posterior weight. NaN and -inf always abort.
  bool allow_infinite_loss = false;
};

struct GibbsResult {
  Distribution posterior;
  double log_normalizer = 0.0;           // log Z = log sum_i pi_i exp(-eta (L_i + shift))
  double anchored_log_normalizer = 0.0;  // log Z~ with min_i L_i subtracted first; always <= 0
};

// The generalized-Bayes update q_i proportional to pi_i * exp(-eta L_i).
// Atoms with zero prior weight keep zero posterior weight regardless of loss
// (absolute continuity); their losses may be anything finite or +inf.
GibbsResult gibbs_update(const Distribution& prior, const LossVector& losses, Temperature eta,
                         const GibbsOptions& opts = {});

// Folds blocks of losses one gibbs_update at a time. Equals the one-shot
// update on the summed losses (batching coherence); the returned
// log_normalizer is the sum of the per-stage normalizers, which telescopes to
// the one-shot log Z.
GibbsResult sequential_update(const Distribution& prior, const std::vector<LossVector>& loss_blocks,
                              Temperature eta, const GibbsOptions& opts = {});

// l -> l + c for a data-only constant c: posterior unchanged, Z scaled by
// exp(-eta c). Exact by construction (increments the symbolic channel).
LossVector apply_data_shift(const LossVector& losses, double c);

// (L, eta) -> (a*L, eta/a) for a > 0: the represented update eta'*L' = eta*L
// is unchanged, so posterior and Z are identical.
struct ScaledLoss {
  LossVector losses;
  Temperature eta;
};
ScaledLoss apply_loss_scaling(const LossVector& losses, Temperature eta, double a);

// Accumulates per-datum losses from a LossModel over a grid: values[i] =
// sum_t eval(theta_i, x_t), shift = sum_t shift(x_t).
LossVector cumulative_loss(const LossModel& model, const ParamGrid& grid, const Dataset& data);

// Same, but only over records [begin, end).
LossVector cumulative_loss(const LossModel& model, const ParamGrid& grid, const Dataset& data,
                           std::size_t begin, std::size_t end);

}  // namespace gridbayes
