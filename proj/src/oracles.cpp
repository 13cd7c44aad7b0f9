#include "entpower/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace entpower::oracles {

namespace {

using namespace std::complex_literals;
constexpr double kPi = std::numbers::pi;
constexpr double kImagResidue = 1e-10;

Complex expi(double x) { return std::polar(1.0, x); }

double checked_real(Complex z, const char* what) {
  if (std::abs(z.imag()) > kImagResidue) {
    throw std::logic_error(std::string(what) + ": closed form left an imaginary residue");
  }
  return z.real();
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace

double ggm_diag1(double phi) {
  const double c = std::cos(phi / 4.0);
  const double s = std::sin(phi / 4.0);
  return std::min(c * c, s * s);
}

double neg_diag1(double phi) {
  const Complex e = expi(phi);
  const Complex root = std::sqrt(e * (1.0 + e) * (1.0 + e));
  const double value =
      (4.0 * std::abs(-1.0 + e) + std::abs(2.0 * root + 4.0 * e) + std::abs(4.0 * e - 2.0 * root) - 8.0) / 16.0;
  return value;
}

double ggm_diag4(double phi1, double phi2, double phi3, double phi4) {
  const double total = phi1 + phi2 + phi3 + phi4;
  const Complex e_total = expi(total);
  const Complex pair = expi(phi1 + phi4) + expi(phi2 + phi3);
  const Complex root = std::sqrt(e_total * pair * pair);
  double best = 1.0;
  for (double sign : {1.0, -1.0}) {
    const Complex value = expi(-total) * (4.0 * e_total - 2.0 * sign * root) / 8.0;
    best = std::min(best, checked_real(value, "ggm_diag4"));
  }
  return best;
}

double neg_diag4(double phi1, double phi2, double phi3, double phi4) {
  const double total = phi1 + phi2 + phi3 + phi4;
  const Complex e_total = expi(total);
  const Complex e14 = expi(phi1 + phi4);
  const Complex e23 = expi(phi2 + phi3);
  const Complex root = std::sqrt(e_total * (e23 + e14) * (e23 + e14));
  // The trailing -4 completes the expression so that it reduces to neg_diag1
  // when phi1 = phi2 = phi3 = 0.
  return (2.0 * std::abs(e23 - e14) + std::abs(root - 2.0 * e_total) + std::abs(root + 2.0 * e_total) - 4.0) / 8.0;
}

double ggm_unl_equalJ(double J) {
  const double c = std::cos(2.0 * J);
  const double s = std::sin(2.0 * J);
  return std::min(c * c, s * s);
}

double quenched_ggm_diag1_closed(double mean, double sd, QuenchBranch branch) {
  if (sd < 0.0) {
    throw InvalidArgument("quenched_ggm_diag1_closed: negative standard deviation");
  }
  const double sign = branch == QuenchBranch::Cos ? 1.0 : -1.0;
  const Complex prefactor = 0.25 * std::exp(-sd * sd / 8.0 - 1i * mean / 2.0);
  const Complex bracket = 2.0 * std::exp((sd * sd + 4i * mean) / 8.0) + sign * expi(mean) + sign * 1.0;
  return checked_real(prefactor * bracket, "quenched_ggm_diag1_closed");
}

BranchMass dominant_branch(double mean, double sd) {
  // sin^2(phi/4) <= cos^2(phi/4) exactly on the windows [4 pi k - pi, 4 pi k + pi].
  if (sd == 0.0) {
    const double folded = std::remainder(mean, 4.0 * kPi);
    return {std::abs(folded) <= kPi ? QuenchBranch::Sin : QuenchBranch::Cos, 1.0};
  }
  double sin_mass = 0.0;
  const double reach = mean / (4.0 * kPi);
  const double span = 10.0 * sd / (4.0 * kPi) + 2.0;
  for (auto k = static_cast<long>(std::floor(reach - span)); k <= static_cast<long>(std::ceil(reach + span)); ++k) {
    const double centre = 4.0 * kPi * static_cast<double>(k);
    sin_mass += normal_cdf((centre + kPi - mean) / sd) - normal_cdf((centre - kPi - mean) / sd);
  }
  sin_mass = std::clamp(sin_mass, 0.0, 1.0);
  if (sin_mass >= 0.5) {
    return {QuenchBranch::Sin, sin_mass};
  }
  return {QuenchBranch::Cos, 1.0 - sin_mass};
}

double neg_unl_noiseless_adc_pdc(double J) {
  const Complex e4 = expi(4.0 * J);
  const Complex e8 = expi(8.0 * J);
  return (std::norm(-1.0 + e4) + std::norm(1.0 + e4) + 2.0 * std::abs(-1.0 + e8) - 4.0) / 8.0;
}

double neg_unl_dpc(double J, double p, bool both_parties) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("neg_unl_dpc: p must lie in [0, 1]");
  }
  const Complex e4 = expi(4.0 * J);
  double value = 0.0;
  if (!both_parties) {
    const Complex e5 = expi(5.0 * J);
    const Complex s = std::numbers::sqrt2 *
                      std::sqrt(-expi(10.0 * J) * (std::cos(8.0 * J) * (p - 2.0) * (p - 2.0) + p * (4.0 - 3.0 * p) - 4.0));
    value = (std::abs((-1.0 + e4) * (-1.0 + e4) * (p - 2.0)) + std::abs((1.0 + e4) * (1.0 + e4) * (p - 2.0)) +
             std::abs(2.0 * e5 * p + s) + std::abs(2.0 * e5 * p - s) - 8.0) /
            16.0;
  } else {
    const Complex e8 = expi(8.0 * J);
    const Complex v = -(-1.0 + e8) * (-1.0 + e8) * (p - 1.0) * (p - 1.0);
    const Complex root = std::sqrt(v);
    value = (std::abs(root - e4 * (p - 2.0) * p) + std::abs(e4 * (p - 2.0) * p + root) +
             std::abs((e4 * (p - 1.0) - 1.0) * (-p + e4 + 1.0)) + std::abs((e4 * (p - 1.0) + 1.0) * (p + e4 - 1.0)) -
             4.0) /
            8.0;
  }
  return std::max(value, 0.0);
}

ComplexMatrix rho_out_unl(double J) {
  const Complex l = expi(-J) / 2.0 + expi(3.0 * J) / 2.0;
  const Complex t = expi(-J) / 2.0 - expi(3.0 * J) / 2.0;
  ComplexVector v = ComplexVector::Zero(4);
  v(1) = l;
  v(2) = t;
  return v * v.adjoint();
}

double diag1_reduced_eigenvalue_max(double phi, double theta1, double theta2) {
  const double a = std::cos(4.0 * (theta1 - theta2)) + std::cos(4.0 * (theta1 + theta2)) -
                   2.0 * std::cos(4.0 * theta1) - 2.0 * std::cos(4.0 * theta2) - 14.0;
  const double s1 = std::sin(2.0 * theta1);
  const double s2 = std::sin(2.0 * theta2);
  const Complex root = std::sqrt(Complex(8.0 * s1 * s1 * s2 * s2 * std::cos(phi) - a, 0.0));
  return checked_real((4.0 + root) / 8.0, "diag1_reduced_eigenvalue_max");
}

std::pair<double, double> unl_reduced_eigenvalues(double J, double theta1, double theta2) {
  const double s = std::sin(theta1 - theta2);
  const Complex e8 = expi(8.0 * J);
  const Complex root = std::sqrt((-1.0 + e8) * (-1.0 + e8) * std::pow(s, 4) + 4.0 * e8);
  const double first = checked_real(0.5 + 0.25 * expi(-4.0 * J) * root, "unl_reduced_eigenvalues");
  const double second = checked_real(0.5 - 0.25 * expi(-4.0 * J) * root, "unl_reduced_eigenvalues");
  return {std::max(first, second), std::min(first, second)};
}

}  // namespace entpower::oracles
