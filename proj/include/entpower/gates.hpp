#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "entpower/types.hpp"

namespace entpower {

/// diag(1, ..., 1, e^{i phi_1}, ..., e^{i phi_k}): the k phases fill the last k slots.
ComplexMatrix diag_unitary(std::span<const double> phis, Eigen::Index dim);
/// All slots given explicitly; the length must be a power of two.
ComplexMatrix diag_unitary(std::span<const double> phis);

/// exp[-i (j1 XX + j2 YY + j3 ZZ)], built from the Bell-basis spectrum of the generator.
ComplexMatrix canonical_nl(double j1, double j2, double j3);

/// Permutation matrix exchanging basis states i and j (0-indexed).
ComplexMatrix transposition_unitary(Eigen::Index i, Eigen::Index j, Eigen::Index dim);

/// Haar-distributed unitary from a seeded Ginibre draw, QR, and diagonal phase fix.
ComplexMatrix haar_random(Eigen::Index dim, std::uint64_t seed);

/// The five printed 4x4 Haar samples, k in 1..5, at four-decimal precision.
ComplexMatrix fixture_haar(int k);

/// Closest unitary in Frobenius norm (polar factor).
ComplexMatrix nearest_unitary(const ComplexMatrix& m);

enum class GateFamily { Diagonal, CanonicalNL, Transposition, HaarRandom, Fixed };

std::string to_string(GateFamily family);
GateFamily parse_gate_family(const std::string& text);

/// A parameterized unitary family together with its parameter values.
///
/// params holds the phases for Diagonal (filling the last slots), (J1, J2, J3)
/// for CanonicalNL, and the two swapped basis indices for Transposition.
/// HaarRandom uses `seed`; Fixed uses `fixed`.
struct GateSpec {
  GateFamily family = GateFamily::Diagonal;
  std::vector<double> params;
  Eigen::Index dim = 4;
  std::uint64_t seed = 0;
  ComplexMatrix fixed;

  static GateSpec diagonal(std::vector<double> phis, Eigen::Index dim);
  static GateSpec canonical(double j1, double j2, double j3);
  static GateSpec transposition(Eigen::Index i, Eigen::Index j, Eigen::Index dim);
  static GateSpec haar(Eigen::Index dim, std::uint64_t seed);
  /// Accepts matrices unitary to within 1e-3; the realized gate is their polar projection.
  static GateSpec from_matrix(ComplexMatrix m);

  int qubits() const;

  /// Same family and fixed data with new parameter values.
  GateSpec with_params(std::vector<double> new_params) const;

  /// The realized unitary; unitary to 1e-10 for every family.
  ComplexMatrix matrix() const;
};

/// Plain-text matrix format: a "dim N" header, then N*N row-major tokens "a+bi".
ComplexMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const ComplexMatrix& m);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

/// Parses a single "a+bi" / "a-bi" / "a" / "bi" token.
Complex parse_complex(const std::string& token);

}  // namespace entpower
