#pragma once

#include <functional>
#include <string>

#include "gridbayes/types.hpp"

namespace gridbayes {

// An f-divergence D(q||pi) = sum_i pi_i * phi(q_i/pi_i) with phi convex and
// phi(1) = 0. Boundary conventions (standard for f-divergences):
//   pi_i = 0, q_i = 0  ->  contributes 0
//   pi_i = 0, q_i > 0  ->  +inf (q must be absolutely continuous w.r.t. pi)
//   q_i = 0, pi_i > 0  ->  pi_i * phi0 where phi0 = lim_{t->0+} phi(t)
struct DivergenceSpec {
  std::string name;
  std::function<double(double)> phi;    // t > 0
  std::function<double(double)> dphi;   // phi'(t), used by the solver
  double phi0 = 0.0;                    // lim t->0+ of phi(t); may be +inf

  static DivergenceSpec kl();                // phi(t) = t ln t,        phi0 = 0
  static DivergenceSpec reverse_kl();        // phi(t) = -ln t,         phi0 = +inf
  static DivergenceSpec chi_squared();       // phi(t) = (t-1)^2,       phi0 = 1
  static DivergenceSpec squared_hellinger(); // phi(t) = (sqrt t - 1)^2, phi0 = 1
  static DivergenceSpec by_name(const std::string& name);

  // Checks phi(1) = 0 within 1e-15 and midpoint convexity on a fixed grid of
  // ratios spanning [1e-3, 1e3]. Throws std::invalid_argument on failure.
  void validate() const;
};

// D(q||pi) under the conventions above. Grids must match.
double f_divergence(const DivergenceSpec& div, const Distribution& q, const Distribution& pi);

// D(q1 x q2 || pi1 x pi2) - D(q1||pi1) - D(q2||pi2), evaluated on the product
// grid. Zero for every product instance iff the divergence is
// product-additive (true for KL; also, it turns out, for reverse-KL).
double product_additivity_gap(const DivergenceSpec& div, const Distribution& q1, const Distribution& pi1,
                              const Distribution& q2, const Distribution& pi2);

}  // namespace gridbayes
