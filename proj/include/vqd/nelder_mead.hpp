#pragma once

#include <functional>
#include <span>
#include <vector>

namespace vqd {

struct NelderMeadSettings {
  double xatol = 1e-2;  // max vertex spread (inf-norm) at termination
  double fatol = 1e-2;  // max value spread at termination
  int max_iter = 0;     // 0 means 200 * dimension
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

// Downhill simplex with the standard coefficients (reflection 1, expansion
// 2, contraction 0.5, shrink 0.5), initial simplex by 5% per-coordinate
// perturbation (0.00025 for zero entries), and termination when both the
// simplex spread and the value spread fall under the tolerances. Always
// returns the best vertex seen, flagged with whether it converged.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& loss,
                             std::span<const double> x0, const NelderMeadSettings& settings);

}  // namespace vqd
