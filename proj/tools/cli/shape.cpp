#include "cli/shape.hpp"

#include <algorithm>
#include <cmath>

namespace entpower::cli {

namespace {

double band(const std::vector<double>& se, std::size_t i, double slack) {
  return (se.empty() ? 0.0 : 3.0 * se[i]) + slack;
}

bool monotone(const std::vector<double>& v, const std::vector<double>& se, double slack, double sign) {
  if (v.size() < 2) {
    return false;
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double step = sign * (v[i + 1] - v[i]);
    if (step < -std::max(band(se, i, slack), band(se, i + 1, slack))) {
      return false;
    }
  }
  return sign * (v.back() - v.front()) > band(se, v.size() - 1, slack);
}

}  // namespace

bool is_increasing(const std::vector<double>& v, const std::vector<double>& se, double slack) {
  return monotone(v, se, slack, 1.0);
}

bool is_decreasing(const std::vector<double>& v, const std::vector<double>& se, double slack) {
  return monotone(v, se, slack, -1.0);
}

bool is_nonincreasing(const std::vector<double>& v, double slack) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i + 1] > v[i] + slack) {
      return false;
    }
  }
  return true;
}

int interior_extremum(const std::vector<double>& v, const std::vector<double>& se) {
  if (v.size() < 3) {
    return -1;
  }
  const std::size_t last = v.size() - 1;
  const auto hi = std::max_element(v.begin() + 1, v.end() - 1);
  const auto lo = std::min_element(v.begin() + 1, v.end() - 1);
  const auto clear = [&](std::size_t m, double sign) {
    const double margin_first = sign * (v[m] - v.front());
    const double margin_last = sign * (v[m] - v[last]);
    const double need_first = se.empty() ? 0.0 : 3.0 * std::max(se[m], se.front());
    const double need_last = se.empty() ? 0.0 : 3.0 * std::max(se[m], se[last]);
    return margin_first > need_first && margin_last > need_last;
  };
  const auto m_hi = static_cast<std::size_t>(hi - v.begin());
  if (clear(m_hi, 1.0)) {
    return static_cast<int>(m_hi);
  }
  const auto m_lo = static_cast<std::size_t>(lo - v.begin());
  if (clear(m_lo, -1.0)) {
    return static_cast<int>(m_lo);
  }
  return -1;
}

double oscillation_depth(const std::vector<double>& v) {
  if (v.empty()) {
    return 0.0;
  }
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

}  // namespace entpower::cli
