#pragma once

#include "entpower/types.hpp"

namespace entpower::oracles {

// Closed-form powers and states for the analytically solvable gate families.
// Complex-valued intermediate expressions are evaluated as written; each
// function checks that the imaginary residue of its result is below 1e-10.

/// GGM power of diag(1,1,1,e^{i phi}): min[cos^2(phi/4), sin^2(phi/4)].
double ggm_diag1(double phi);

/// Negativity power of diag(1,1,1,e^{i phi}) on its (theta = pi/4) optimal input.
double neg_diag1(double phi);

/// GGM power of diag(e^{i phi1}, ..., e^{i phi4}). Both square-root branches
/// are evaluated and the smaller real value kept.
double ggm_diag4(double phi1, double phi2, double phi3, double phi4);

/// Negativity power of diag(e^{i phi1}, ..., e^{i phi4}).
double neg_diag4(double phi1, double phi2, double phi3, double phi4);

/// GGM power of exp[-i J (XX + YY + ZZ)]: min[cos^2 2J, sin^2 2J].
double ggm_unl_equalJ(double J);

enum class QuenchBranch { Cos, Sin };

/// Gaussian average of cos^2(phi/4) (Cos) or sin^2(phi/4) (Sin) for
/// phi ~ N(mean, sd^2), over the whole real line.
double quenched_ggm_diag1_closed(double mean, double sd, QuenchBranch branch);

/// Which min-branch holds for phi ~ N(mean, sd^2) and the Gaussian mass on which it holds.
struct BranchMass {
  QuenchBranch branch;
  double mass;
};
BranchMass dominant_branch(double mean, double sd);

/// Negativity power of the equal-J canonical gate, unchanged by ADC on qubit 0
/// or PDC on either or both qubits.
double neg_unl_noiseless_adc_pdc(double J);

/// Negativity of the equal-J canonical gate on |01> after DPC of strength p on
/// one qubit or on both; negative values of the expression are clamped to 0.
double neg_unl_dpc(double J, double p, bool both_parties);

/// Output state U_NL(J) rho U_NL(J)^dagger for rho = |01><01| (any ADC on qubit 0 / PDC strength).
ComplexMatrix rho_out_unl(double J);

/// Larger root of the reduced-state eigenvalue pair of diag(1,1,1,e^{i phi})
/// acting on the product input with polar angles theta1, theta2.
double diag1_reduced_eigenvalue_max(double phi, double theta1, double theta2);

/// Reduced-state eigenvalue pair (larger first) of U_NL(J) on a real product input.
std::pair<double, double> unl_reduced_eigenvalues(double J, double theta1, double theta2);

}  // namespace entpower::oracles
