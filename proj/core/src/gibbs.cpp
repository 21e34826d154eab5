#include "gridbayes/gibbs.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gridbayes/simplex.hpp"

namespace gridbayes {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<double> LossVector::materialized() const {
  std::vector<double> out = values;
  for (double& v : out) v += shift;
  return out;
}

GibbsResult gibbs_update(const Distribution& prior, const LossVector& losses, Temperature eta,
                         const GibbsOptions& opts) {
  prior.validate();
  if (losses.size() != prior.grid.size()) {
    throw std::invalid_argument("gibbs_update: loss count does not match grid size");
  }
  if (!std::isfinite(losses.shift)) throw std::invalid_argument("gibbs_update: non-finite loss shift");

  const std::size_t m = losses.size();
  std::vector<double> raw(m);
  double min_loss = kInf;  // over positive-prior atoms; the anchor
  for (std::size_t i = 0; i < m; ++i) {
    const double lp = prior.log_weights[i];
    const double li = losses.values[i];
    if (std::isinf(lp) && lp < 0) {
      raw[i] = -kInf;  // zero prior weight stays zero, loss irrelevant
      continue;
    }
    if (std::isnan(li) || (std::isinf(li) && li < 0)) {
      throw std::invalid_argument("gibbs_update: invalid loss at atom " + std::to_string(i));
    }
    if (std::isinf(li)) {
      if (!opts.allow_infinite_loss) {
        throw std::invalid_argument("gibbs_update: non-finite loss at positive-prior atom " +
                                    std::to_string(i));
      }
      raw[i] = -kInf;
      continue;
    }
    raw[i] = lp - eta.eta * li;
    if (li < min_loss) min_loss = li;
  }
  if (std::isinf(min_loss)) {
    throw std::invalid_argument("gibbs_update: no positive-prior atom has finite loss");
  }

  const double log_z_raw = logsumexp(raw);
  std::vector<double> post(m);
  for (std::size_t i = 0; i < m; ++i) post[i] = raw[i] - log_z_raw;

  // log Z~ = log sum_i pi_i exp(-eta (L_i - min L)) = log Z_raw + eta*min L.
  // Z~ lies in (0, 1]; rounding can push the log a few ulp above 0, clamp.
  double anchored = log_z_raw + eta.eta * min_loss;
  if (anchored > 0.0) anchored = 0.0;

  GibbsResult r{Distribution{prior.grid, std::move(post)}, log_z_raw - eta.eta * losses.shift, anchored};
  r.posterior.validate();
  return r;
}

GibbsResult sequential_update(const Distribution& prior, const std::vector<LossVector>& loss_blocks,
                              Temperature eta, const GibbsOptions& opts) {
  if (loss_blocks.empty()) throw std::invalid_argument("sequential_update: no loss blocks");
  const std::size_t m = prior.grid.size();

  Distribution current = prior;
  double log_z_sum = 0.0;
  LossVector total;
  total.values.assign(m, 0.0);
  for (std::size_t b = 0; b < loss_blocks.size(); ++b) {
    const auto& block = loss_blocks[b];
    if (block.size() != m) {
      throw std::invalid_argument("sequential_update: block " + std::to_string(b) + " size mismatch");
    }
    GibbsResult stage = gibbs_update(current, block, eta, opts);
    log_z_sum += stage.log_normalizer;
    current = std::move(stage.posterior);
    for (std::size_t i = 0; i < m; ++i) total.values[i] += block.values[i];
    total.shift += block.shift;
  }

  // Anchoring is a statement about the total loss, so recompute it there.
  double min_loss = kInf;
  for (std::size_t i = 0; i < m; ++i) {
    const double lp = prior.log_weights[i];
    if (std::isinf(lp) && lp < 0) continue;
    if (total.values[i] < min_loss) min_loss = total.values[i];
  }
  double anchored = (log_z_sum + eta.eta * total.shift) + eta.eta * min_loss;
  if (anchored > 0.0) anchored = 0.0;

  return GibbsResult{std::move(current), log_z_sum, anchored};
}

LossVector apply_data_shift(const LossVector& losses, double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("apply_data_shift: shift must be finite");
  LossVector out = losses;
  out.shift += c;
  return out;
}

ScaledLoss apply_loss_scaling(const LossVector& losses, Temperature eta, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("apply_loss_scaling: need finite a > 0");
  LossVector scaled;
  scaled.values.reserve(losses.size());
  for (double v : losses.values) scaled.values.push_back(a * v);
  scaled.shift = a * losses.shift;
  return ScaledLoss{std::move(scaled), Temperature(eta.eta / a)};
}

LossVector cumulative_loss(const LossModel& model, const ParamGrid& grid, const Dataset& data) {
  return cumulative_loss(model, grid, data, 0, data.size());
}

LossVector cumulative_loss(const LossModel& model, const ParamGrid& grid, const Dataset& data,
                           std::size_t begin, std::size_t end) {
  grid.validate();
  if (!model.eval) throw std::invalid_argument("cumulative_loss: LossModel has no eval oracle");
  if (begin > end || end > data.size()) throw std::invalid_argument("cumulative_loss: bad record range");
  LossVector out;
  out.values.assign(grid.size(), 0.0);
  for (std::size_t t = begin; t < end; ++t) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      out.values[i] += model.eval(grid.atoms[i], data.records[t]);
    }
    out.shift += model.shift_at(data.records[t]);
  }
  return out;
}

}  // namespace gridbayes
