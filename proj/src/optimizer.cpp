#include "entpower/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "entpower/types.hpp"

namespace entpower {

namespace {

struct Simplex {
  std::vector<Eigen::VectorXd> vertices;
  std::vector<double> costs;  // minimized: the negated objective
};

// One downhill-simplex run with adaptive (dimension-dependent) coefficients.
NelderMeadResult run_simplex(const Objective& f, const Eigen::VectorXd& start, const NelderMeadOptions& options,
                             int iteration_budget) {
  const auto n = static_cast<int>(start.size());
  const double dn = static_cast<double>(n);
  const double alpha = 1.0;
  const double gamma = 1.0 + 2.0 / dn;
  const double rho = 0.75 - 1.0 / (2.0 * dn);
  const double sigma = 1.0 - 1.0 / dn;

  NelderMeadResult result;
  const auto cost = [&](const Eigen::VectorXd& x) {
    ++result.evaluations;
    return -f(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
  };

  Simplex s;
  s.vertices.push_back(start);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd v = start;
    v(k) += options.initial_step;
    s.vertices.push_back(v);
  }
  for (const auto& v : s.vertices) {
    s.costs.push_back(cost(v));
  }

  std::vector<int> order(static_cast<std::size_t>(n + 1));
  for (; result.iterations < iteration_budget; ++result.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return s.costs[static_cast<std::size_t>(a)] < s.costs[static_cast<std::size_t>(b)];
    });
    const auto best = static_cast<std::size_t>(order.front());
    const auto worst = static_cast<std::size_t>(order.back());
    const auto second_worst = static_cast<std::size_t>(order[static_cast<std::size_t>(n - 1)]);

    double spread = s.costs[worst] - s.costs[best];
    double diameter = 0.0;
    for (const auto& v : s.vertices) {
      diameter = std::max(diameter, (v - s.vertices[best]).cwiseAbs().maxCoeff());
    }
    if (spread <= options.ftol && diameter <= options.xtol) {
      result.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k < s.vertices.size(); ++k) {
      if (k != worst) {
        centroid += s.vertices[k];
      }
    }
    centroid /= dn;

    const Eigen::VectorXd reflected = centroid + alpha * (centroid - s.vertices[worst]);
    const double reflected_cost = cost(reflected);
    if (reflected_cost < s.costs[best]) {
      const Eigen::VectorXd expanded = centroid + gamma * (reflected - centroid);
      const double expanded_cost = cost(expanded);
      if (expanded_cost < reflected_cost) {
        s.vertices[worst] = expanded;
        s.costs[worst] = expanded_cost;
      } else {
        s.vertices[worst] = reflected;
        s.costs[worst] = reflected_cost;
      }
      continue;
    }
    if (reflected_cost < s.costs[second_worst]) {
      s.vertices[worst] = reflected;
      s.costs[worst] = reflected_cost;
      continue;
    }
    const bool outside = reflected_cost < s.costs[worst];
    const Eigen::VectorXd contracted = outside ? Eigen::VectorXd(centroid + rho * (reflected - centroid))
                                               : Eigen::VectorXd(centroid + rho * (s.vertices[worst] - centroid));
    const double contracted_cost = cost(contracted);
    if (contracted_cost < (outside ? reflected_cost : s.costs[worst])) {
      s.vertices[worst] = contracted;
      s.costs[worst] = contracted_cost;
      continue;
    }
    for (std::size_t k = 0; k < s.vertices.size(); ++k) {
      if (k != best) {
        s.vertices[k] = s.vertices[best] + sigma * (s.vertices[k] - s.vertices[best]);
        s.costs[k] = cost(s.vertices[k]);
      }
    }
  }

  const auto best =
      static_cast<std::size_t>(std::min_element(s.costs.begin(), s.costs.end()) - s.costs.begin());
  result.x.assign(s.vertices[best].data(), s.vertices[best].data() + n);
  result.value = -s.costs[best];
  return result;
}

}  // namespace

NelderMeadResult nelder_mead_maximize(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options) {
  if (x0.empty()) {
    throw InvalidArgument("nelder_mead_maximize: empty starting point");
  }
  if (options.max_iters < 1) {
    throw InvalidArgument("nelder_mead_maximize: max_iters must be positive");
  }
  Eigen::VectorXd start = Eigen::Map<const Eigen::VectorXd>(x0.data(), static_cast<Eigen::Index>(x0.size()));
  NelderMeadResult total = run_simplex(f, start, options, options.max_iters);
  for (int round = 0; round < options.polish_rounds && total.iterations < options.max_iters; ++round) {
    start = Eigen::Map<const Eigen::VectorXd>(total.x.data(), static_cast<Eigen::Index>(total.x.size()));
    NelderMeadResult next = run_simplex(f, start, options, options.max_iters - total.iterations);
    total.iterations += next.iterations;
    total.evaluations += next.evaluations;
    const double gain = next.value - total.value;
    if (next.value >= total.value) {
      total.x = std::move(next.x);
      total.value = next.value;
    }
    total.converged = next.converged;
    if (gain <= options.ftol) {
      break;
    }
  }
  return total;
}

}  // namespace entpower
