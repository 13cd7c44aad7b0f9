#pragma once

#include <set>
#include <vector>

#include "entpower/types.hpp"

namespace entpower {

/// Two-sided split of the subsystems of a layout. `side_b` is the complement of `side_a`.
struct Bipartition {
  std::set<int> side_a;

  std::set<int> side_b(const SubsystemLayout& layout) const;

  /// Throws unless side_a is a nonempty proper subset of the layout's subsystems.
  void validate(const SubsystemLayout& layout) const;

  /// All 2^(N-1) - 1 unordered cuts of an N-party layout; side_a never contains the last subsystem.
  static std::vector<Bipartition> all_cuts(const SubsystemLayout& layout);
};

/// Eigenvalues at or above -1e-12 are treated as zero when summing negative parts.
constexpr double kNegativeEigenvalueCutoff = 1e-12;

/// Sum of |negative eigenvalues| of the partial transpose across `cut`.
double negativity(const DensityMatrix& rho, const Bipartition& cut, const SubsystemLayout& layout);

/// Squared-negativity monogamy score with `nodal` as the nodal party.
///
/// N^2(nodal : rest) minus the sum over the other parties i of N^2 of the
/// two-party marginal on {nodal, i}. Requires at least three parties.
double monogamy_score_neg_sq(const DensityMatrix& rho, int nodal, const SubsystemLayout& layout);

/// Spectrum (descending, clamped at zero) of the reduced state on the smaller side of `cut`.
RealVector schmidt_eigenvalues(const StateVector& psi, const Bipartition& cut, const SubsystemLayout& layout);

/// Generalized geometric measure of a pure state: 1 minus the largest Schmidt
/// eigenvalue over all bipartitions.
double ggm(const StateVector& psi, const SubsystemLayout& layout);

}  // namespace entpower
