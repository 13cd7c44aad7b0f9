#pragma once

#include <functional>
#include <span>
#include <vector>

namespace entpower {

struct NelderMeadOptions {
  int max_iters = 2000;
  /// Stop once the spread of simplex values is below this...
  double ftol = 1e-9;
  /// ...and every vertex lies within this distance (max-norm) of the best one.
  double xtol = 1e-7;
  double initial_step = 0.4;
  /// Fresh-simplex restarts from the incumbent after convergence.
  int polish_rounds = 2;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Maximizes `f` by the Nelder-Mead downhill simplex started at `x0`.
NelderMeadResult nelder_mead_maximize(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options);

}  // namespace entpower
