#pragma once

#include <cstddef>
#include <vector>

#include "gridbayes/divergence.hpp"
#include "gridbayes/gibbs.hpp"
#include "gridbayes/types.hpp"

namespace gridbayes {

struct SolveReport {
  Distribution solution;
  double objective = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  double final_step_norm = 0.0;
  double kkt_residual = 0.0;  // || q .* (grad - <grad,q>) ||_2, the simplex stationarity measure
};

struct SolveOptions {
  double tol = 1e-10;            // on the L1 step norm (and the KKT residual)
  std::size_t max_iterations = 100000;
};

// E_q[L] + (1/eta) D(q||baseline). Returns +inf when q is not absolutely
// continuous w.r.t. the baseline (or the divergence itself is +inf there).
double objective(const Distribution& q, const LossVector& losses, Temperature eta,
                 const DivergenceSpec& div, const Distribution& baseline);

// Minimizes the penalized objective over the simplex by exponentiated
// gradient (multiplicative weights) with Armijo backtracking, starting from
// the baseline. Deliberately generic in the divergence: for KL the minimizer
// coincides with gibbs_update and the optimal value with -(1/eta) log Z, and
// the tests exploit that the two routes are computed independently.
SolveReport solve_penalized(const Distribution& baseline, const LossVector& losses, Temperature eta,
                            const DivergenceSpec& div, const SolveOptions& opts = {});

// Linear preferences over randomized rules are optimized at vertices: the
// exact maximizer set of u |-> sum_i u_i q_i over the simplex.
struct VnmRule {
  Distribution rule;                   // point mass on the lowest-index argmax atom
  std::vector<std::size_t> argmax_set; // all atoms attaining the maximum (exact double comparison)
};
VnmRule vnm_optimal_rule(const ParamGrid& grid, const std::vector<double>& utility);

// Demonstration companion to vnm_optimal_rule: runs exponentiated-gradient
// ascent on the bare linear functional from the uniform start. With a unique
// argmax the iterates collapse onto that vertex; the returned distribution of
// a converged run is numerically a point mass.
Distribution maximize_linear_over_simplex(const ParamGrid& grid, const std::vector<double>& utility,
                                          std::size_t max_iterations = 100000);

}  // namespace gridbayes
