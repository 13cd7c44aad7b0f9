#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entpower/types.hpp"

namespace entpower {

/// One (theta, xi) pair per qubit: cos(theta)|0> + sin(theta) e^{i xi}|1>.
struct ProductParams {
  std::vector<double> thetas;
  std::vector<double> xis;

  int qubits() const { return static_cast<int>(thetas.size()); }

  /// Interleaved layout (theta_0, xi_0, theta_1, xi_1, ...).
  std::vector<double> flatten() const;
  static ProductParams from_flat(std::span<const double> x);
};

/// A two-qubit factor on qubits (0, 1) times a single-qubit factor on qubit 2.
///
/// The pair amplitudes are hyperspherical:
///   a00 = cos t1
///   a01 = sin t1 cos t2 e^{i x1}
///   a10 = sin t1 sin t2 cos t3 e^{i x2}
///   a11 = sin t1 sin t2 sin t3
struct BisepParams {
  double pair_theta1 = 0.0;
  double pair_theta2 = 0.0;
  double pair_theta3 = 0.0;
  double pair_xi1 = 0.0;
  double pair_xi2 = 0.0;
  double theta = 0.0;
  double xi = 0.0;

  /// (t1, t2, t3, x1, x2, theta, xi).
  std::vector<double> flatten() const;
  static BisepParams from_flat(std::span<const double> x);
};

/// Single-qubit amplitude pair for (theta, xi).
Eigen::Vector2cd qubit_state(double theta, double xi);

StateVector product_state(const ProductParams& p);
/// As above, but rejects parameter lists whose length differs from `qubits`.
StateVector product_state(const ProductParams& p, int qubits);

StateVector bisep_state(const BisepParams& p);

/// Biseparable coordinates of a three-qubit product state, when it lies in the
/// BisepParams family: a00 and a11 of the pair factor must share a phase up to
/// sign (xi_0 + xi_1 a multiple of pi). Returns nullopt otherwise.
std::optional<BisepParams> bisep_from_product(const ProductParams& p);

/// Folds every angle into theta in [0, pi], xi in [0, 2 pi) without changing the state.
ProductParams canonicalize(const ProductParams& p);

/// Manifold of separable inputs over which a gate's power is maximized.
enum class InputSet { FullySeparable, Biseparable12_3 };

std::string to_string(InputSet set);
InputSet parse_input_set(const std::string& text);

/// Number of real coordinates of the manifold for an N-qubit register.
int parameter_count(InputSet set, int qubits);

/// Coordinates drawn uniformly over the natural box of each angle.
template <typename Rng>
std::vector<double> random_coordinates(InputSet set, int qubits, Rng& rng);

StateVector input_state(InputSet set, int qubits, std::span<const double> x);

/// Canonical representative of a coordinate vector (phases folded, product angles canonicalized).
std::vector<double> canonical_coordinates(InputSet set, std::span<const double> x);

}  // namespace entpower

#include <numbers>
#include <random>

namespace entpower {

template <typename Rng>
std::vector<double> random_coordinates(InputSet set, int qubits, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = parameter_count(set, qubits);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    bool is_phase = false;
    if (set == InputSet::FullySeparable) {
      is_phase = (k % 2) == 1;
    } else {
      is_phase = (k == 3 || k == 4 || k == 6);
    }
    const double u = unit(rng);
    x[static_cast<std::size_t>(k)] = is_phase ? 2.0 * std::numbers::pi * u : std::numbers::pi * u;
  }
  return x;
}

}  // namespace entpower
