#pragma once

#include <cstddef>
#include <vector>

namespace entpower::cli {

// Shape tests on a sampled curve v with per-point standard errors se (zero for
// deterministic curves). `slack` absorbs optimizer noise in deterministic curves.

/// Every step rises by at least -3 se and the total rise exceeds 3 se.
bool is_increasing(const std::vector<double>& v, const std::vector<double>& se, double slack = 1e-9);
bool is_decreasing(const std::vector<double>& v, const std::vector<double>& se, double slack = 1e-9);
/// Never rises by more than the slack.
bool is_nonincreasing(const std::vector<double>& v, double slack = 1e-7);

/// Index of an interior point lying more than 3 se above (or below) both end
/// points, or -1 when no such point exists.
int interior_extremum(const std::vector<double>& v, const std::vector<double>& se);

/// max - min over the curve.
double oscillation_depth(const std::vector<double>& v);

}  // namespace entpower::cli
