#pragma once

#include <span>
#include <vector>

namespace gridbayes {

// log(sum_i exp(v_i)) with the usual max shift. -inf entries contribute
// nothing; an all -inf (or empty) input returns -inf. The reduction runs in
// ascending index order, always: sequential-vs-one-shot comparisons elsewhere
// rely on both paths rounding identically, so no parallel or reordered
// summation here.
double logsumexp(std::span<const double> v);

// v - logsumexp(v): normalized log weights. Subtracting a common constant
// from every entry is a no-op (the max shift removes it before any rounding
// of the exponentials). Throws std::invalid_argument if any entry is NaN
// ("invalid weight") or all entries are -inf ("degenerate weights").
std::vector<double> normalize_log_weights(std::span<const double> raw_log_weights);

// 0.5 * sum_i |p_i - q_i| for probability vectors of equal length.
double total_variation_probs(std::span<const double> p, std::span<const double> q);

}  // namespace gridbayes
