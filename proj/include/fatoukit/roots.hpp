#pragma once

#include <vector>

#include "fatoukit/expr.hpp"

namespace fatoukit {

struct AberthResult {
  std::vector<cd> roots;  // with multiplicity, clusters merged to their mean
  int sweeps = 0;
  bool converged = false;
};

/// All roots of sum coeffs[k] z^k (ascending; leading coefficient nonzero)
/// by Aberth-Ehrlich iteration from a perturbed circle of radius
/// 1 + max |a_k / a_n|, followed by Newton polishing.
AberthResult aberth_roots(const std::vector<cd>& coeffs, int max_sweeps = 100);

}  // namespace fatoukit
