#include "entpower/states.hpp"

#include <cmath>
#include <numbers>

#include "entpower/tensor.hpp"

namespace entpower {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double fold_phase(double xi) {
  double out = std::fmod(xi, kTwoPi);
  if (out < 0.0) {
    out += kTwoPi;
  }
  if (out >= kTwoPi) {
    out = 0.0;
  }
  return out;
}

// Representative of theta in (-pi, pi].
double fold_symmetric(double theta) {
  double out = std::fmod(theta, kTwoPi);
  if (out > std::numbers::pi) {
    out -= kTwoPi;
  } else if (out <= -std::numbers::pi) {
    out += kTwoPi;
  }
  return out;
}

}  // namespace

std::vector<double> ProductParams::flatten() const {
  std::vector<double> x;
  x.reserve(2 * thetas.size());
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    x.push_back(thetas[k]);
    x.push_back(xis[k]);
  }
  return x;
}

ProductParams ProductParams::from_flat(std::span<const double> x) {
  if (x.size() % 2 != 0) {
    throw InvalidArgument("ProductParams: odd number of coordinates");
  }
  ProductParams p;
  for (std::size_t k = 0; k < x.size(); k += 2) {
    p.thetas.push_back(x[k]);
    p.xis.push_back(x[k + 1]);
  }
  return p;
}

std::vector<double> BisepParams::flatten() const {
  return {pair_theta1, pair_theta2, pair_theta3, pair_xi1, pair_xi2, theta, xi};
}

BisepParams BisepParams::from_flat(std::span<const double> x) {
  if (x.size() != 7) {
    throw InvalidArgument("BisepParams: expected 7 coordinates");
  }
  return {x[0], x[1], x[2], x[3], x[4], x[5], x[6]};
}

Eigen::Vector2cd qubit_state(double theta, double xi) {
  return {Complex(std::cos(theta), 0.0), std::sin(theta) * std::polar(1.0, xi)};
}

StateVector product_state(const ProductParams& p) {
  if (p.thetas.size() != p.xis.size()) {
    throw InvalidArgument("product_state: theta and xi lists differ in length");
  }
  if (p.thetas.empty()) {
    throw InvalidArgument("product_state: no qubits");
  }
  StateVector psi = StateVector::Ones(1);
  for (std::size_t k = 0; k < p.thetas.size(); ++k) {
    psi = kron(psi, qubit_state(p.thetas[k], p.xis[k]));
  }
  return psi;
}

StateVector product_state(const ProductParams& p, int qubits) {
  if (p.qubits() != qubits || static_cast<int>(p.xis.size()) != qubits) {
    throw InvalidArgument("product_state: expected parameters for " + std::to_string(qubits) + " qubits");
  }
  return product_state(p);
}

StateVector bisep_state(const BisepParams& p) {
  const double s1 = std::sin(p.pair_theta1);
  const double s2 = std::sin(p.pair_theta2);
  Eigen::Vector4cd pair;
  pair << Complex(std::cos(p.pair_theta1), 0.0), s1 * std::cos(p.pair_theta2) * std::polar(1.0, p.pair_xi1),
      s1 * s2 * std::cos(p.pair_theta3) * std::polar(1.0, p.pair_xi2), Complex(s1 * s2 * std::sin(p.pair_theta3), 0.0);
  return kron(pair, qubit_state(p.theta, p.xi));
}

std::optional<BisepParams> bisep_from_product(const ProductParams& p) {
  if (p.qubits() != 3 || p.xis.size() != 3) {
    throw InvalidArgument("bisep_from_product: expected a three-qubit product");
  }
  Eigen::Vector4cd pair = kron(qubit_state(p.thetas[0], p.xis[0]), qubit_state(p.thetas[1], p.xis[1]));
  const Complex anchor = std::abs(pair(0)) >= std::abs(pair(3)) ? pair(0) : pair(3);
  if (std::abs(anchor) > 1e-12) {
    pair *= std::conj(anchor) / std::abs(anchor);
  }
  if (std::abs(pair(0).imag()) > 1e-12 || std::abs(pair(3).imag()) > 1e-12) {
    return std::nullopt;
  }
  const double a00 = pair(0).real();
  const double a11 = pair(3).real();
  const double r01 = std::abs(pair(1));
  const double r10 = std::abs(pair(2));
  BisepParams out;
  out.pair_theta1 = std::atan2(std::sqrt(r01 * r01 + r10 * r10 + a11 * a11), a00);
  out.pair_theta2 = std::atan2(std::sqrt(r10 * r10 + a11 * a11), r01);
  out.pair_theta3 = std::atan2(a11, r10);
  out.pair_xi1 = std::arg(pair(1));
  out.pair_xi2 = std::arg(pair(2));
  out.theta = p.thetas[2];
  out.xi = p.xis[2];
  return out;
}

ProductParams canonicalize(const ProductParams& p) {
  ProductParams out = p;
  for (std::size_t k = 0; k < out.thetas.size(); ++k) {
    double theta = fold_symmetric(out.thetas[k]);
    double xi = out.xis[k];
    if (theta < 0.0) {
      theta = -theta;
      xi += std::numbers::pi;
    }
    out.thetas[k] = theta;
    out.xis[k] = fold_phase(xi);
  }
  return out;
}

std::string to_string(InputSet set) {
  return set == InputSet::FullySeparable ? "fs" : "bs";
}

InputSet parse_input_set(const std::string& text) {
  if (text == "fs" || text == "fully_separable") {
    return InputSet::FullySeparable;
  }
  if (text == "bs" || text == "biseparable" || text == "bs12_3") {
    return InputSet::Biseparable12_3;
  }
  throw InvalidArgument("unknown input set '" + text + "' (expected fs or bs)");
}

int parameter_count(InputSet set, int qubits) {
  if (set == InputSet::Biseparable12_3) {
    if (qubits != 3) {
      throw InvalidArgument("biseparable 12:3 inputs require exactly three qubits");
    }
    return 7;
  }
  if (qubits < 1) {
    throw InvalidArgument("fully separable inputs need at least one qubit");
  }
  return 2 * qubits;
}

StateVector input_state(InputSet set, int qubits, std::span<const double> x) {
  if (static_cast<int>(x.size()) != parameter_count(set, qubits)) {
    throw InvalidArgument("input_state: wrong number of coordinates");
  }
  if (set == InputSet::FullySeparable) {
    return product_state(ProductParams::from_flat(x));
  }
  return bisep_state(BisepParams::from_flat(x));
}

std::vector<double> canonical_coordinates(InputSet set, std::span<const double> x) {
  if (set == InputSet::FullySeparable) {
    return canonicalize(ProductParams::from_flat(x)).flatten();
  }
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t k : {std::size_t{3}, std::size_t{4}, std::size_t{6}}) {
    out[k] = fold_phase(out[k]);
  }
  return out;
}

}  // namespace entpower
