#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "entpower/gates.hpp"
#include "entpower/tensor.hpp"
#include "support/reference.hpp"

using namespace entpower;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("diagonal unitaries fill the last slots") {
  const std::vector<double> phi{kPi / 2.0};
  const ComplexMatrix u = diag_unitary(phi, 4);
  CHECK(std::abs(u(3, 3) - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(u(0, 0) - Complex(1, 0)) < 1e-15);
  const std::vector<double> four{0.1, 0.2, 0.3, 0.4};
  const ComplexMatrix d = diag_unitary(four);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::arg(d(k, k)) == doctest::Approx(four[static_cast<std::size_t>(k)]));
  }
  const ComplexMatrix d8 = GateSpec::diagonal({kPi}, 8).matrix();
  CHECK(std::abs(d8(7, 7) + 1.0) < 1e-15);
  CHECK(std::abs(d8(6, 6) - 1.0) < 1e-15);
  CHECK_THROWS_AS(diag_unitary(four, 6), InvalidArgument);
  CHECK_THROWS_AS(diag_unitary(four, 2), InvalidArgument);
}

TEST_CASE("canonical gate equals the matrix exponential of its generator") {
  for (auto [j1, j2, j3] : {std::tuple{0.3, 0.3, 0.3}, {0.7, 0.2, 0.2}, {1.1, -0.4, 2.5}, {kPi / 8, 0.0, 0.0}}) {
    const ComplexMatrix u = canonical_nl(j1, j2, j3);
    CHECK((u - reference::canonical_by_expm(j1, j2, j3)).norm() < 1e-12);
    CHECK(is_unitary(u, 1e-12));
  }
}

TEST_CASE("equal-J canonical gate spectrum on the Bell basis") {
  const double j = 0.37;
  const ComplexMatrix u = canonical_nl(j, j, j);
  const double r = 1.0 / std::sqrt(2.0);
  ComplexVector psi_minus = ComplexVector::Zero(4);
  psi_minus(1) = r;
  psi_minus(2) = -r;
  CHECK(((u * psi_minus) - std::polar(1.0, 3.0 * j) * psi_minus).norm() < 1e-13);
  ComplexVector triplet = ComplexVector::Zero(4);
  triplet(0) = 1.0;
  CHECK(((u * triplet) - std::polar(1.0, -j) * triplet).norm() < 1e-13);
  triplet.setZero();
  triplet(3) = 1.0;
  CHECK(((u * triplet) - std::polar(1.0, -j) * triplet).norm() < 1e-13);
}

TEST_CASE("transposition unitary swaps two basis states") {
  const ComplexMatrix p = transposition_unitary(1, 7, 8);
  CHECK(std::abs(p(7, 1) - 1.0) < 1e-15);
  CHECK(std::abs(p(1, 1)) < 1e-15);
  CHECK((p * p - ComplexMatrix::Identity(8, 8)).norm() < 1e-15);
  CHECK_THROWS_AS(transposition_unitary(2, 2, 4), InvalidArgument);
  CHECK_THROWS_AS(transposition_unitary(0, 4, 4), InvalidArgument);
}

TEST_CASE("haar_random is unitary and reproducible") {
  const ComplexMatrix a = haar_random(4, 42);
  const ComplexMatrix b = haar_random(4, 42);
  const ComplexMatrix c = haar_random(4, 43);
  CHECK(is_unitary(a, 1e-12));
  CHECK((a - b).norm() == 0.0);
  CHECK((a - c).norm() > 0.1);
  CHECK(is_unitary(haar_random(8, 1), 1e-12));
}

TEST_CASE("haar_random moments: E|U_00|^2 = 1/d and E|U_00|^4 = 2/(d(d+1))") {
  const int n = 4000;
  const double d = 4.0;
  double m2 = 0.0, m4 = 0.0;
  for (int s = 0; s < n; ++s) {
    const double a = std::norm(haar_random(4, static_cast<std::uint64_t>(s))(0, 0));
    m2 += a;
    m4 += a * a;
  }
  m2 /= n;
  m4 /= n;
  CHECK(m2 == doctest::Approx(1.0 / d).epsilon(0.05));
  CHECK(m4 == doctest::Approx(2.0 / (d * (d + 1.0))).epsilon(0.1));
}

TEST_CASE("fixture matrices are unitary at their printed precision") {
  for (int k = 1; k <= 5; ++k) {
    const ComplexMatrix m = fixture_haar(k);
    CHECK(m.rows() == 4);
    CHECK(is_unitary(m, 5e-4));
    const GateSpec g = GateSpec::from_matrix(m);
    const ComplexMatrix realized = g.matrix();
    CHECK(is_unitary(realized, 1e-12));
    CHECK((realized - m).cwiseAbs().maxCoeff() < 5e-4);
  }
  CHECK_THROWS_AS(fixture_haar(0), InvalidArgument);
  CHECK_THROWS_AS(fixture_haar(6), InvalidArgument);
}

TEST_CASE("fixed gates must be nearly unitary") {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m(0, 0) = 1.01;
  CHECK_THROWS_AS(GateSpec::from_matrix(m), InvalidArgument);
  CHECK_THROWS_AS(GateSpec::from_matrix(ComplexMatrix::Identity(3, 3)), InvalidArgument);
}

TEST_CASE("GateSpec families and parameter replacement") {
  const GateSpec d = GateSpec::diagonal({0.3}, 4);
  CHECK(d.qubits() == 2);
  CHECK(GateSpec::diagonal({0.3}, 16).qubits() == 4);
  const GateSpec d2 = d.with_params({0.6});
  CHECK(std::arg(d2.matrix()(3, 3)) == doctest::Approx(0.6));
  CHECK(parse_gate_family("canonical") == GateFamily::CanonicalNL);
  CHECK(to_string(GateFamily::Transposition) == "transposition");
  CHECK_THROWS_AS(parse_gate_family("cnot"), InvalidArgument);
  CHECK_THROWS_AS(GateSpec::canonical(1, 2, 3).with_params({1.0}).matrix(), InvalidArgument);
}

TEST_CASE("complex token parsing") {
  CHECK(parse_complex("1.5") == Complex(1.5, 0));
  CHECK(parse_complex("-2i") == Complex(0, -2));
  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("0.25-0.5i") == Complex(0.25, -0.5));
  CHECK(parse_complex("1e-3+2.5e+1j") == Complex(1e-3, 25.0));
  CHECK(parse_complex("-0.4961+0.1386i") == Complex(-0.4961, 0.1386));
  CHECK_THROWS_AS(parse_complex("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_complex(""), InvalidArgument);
  CHECK_THROWS_AS(parse_complex("1+2"), InvalidArgument);
}

TEST_CASE("matrix file round trip is exact") {
  const ComplexMatrix u = haar_random(4, 7);
  std::stringstream buffer;
  write_matrix(buffer, u);
  const ComplexMatrix back = read_matrix(buffer);
  CHECK((back - u).norm() == 0.0);
}

TEST_CASE("matrix reader rejects malformed input") {
  std::istringstream missing_header("1 0 0 1");
  CHECK_THROWS_AS(read_matrix(missing_header), InvalidArgument);
  std::istringstream short_body("dim 2\n1 0 0");
  CHECK_THROWS_AS(read_matrix(short_body), InvalidArgument);
  std::istringstream trailing("dim 1\n1 2");
  CHECK_THROWS_AS(read_matrix(trailing), InvalidArgument);
  std::istringstream ok("dim 2\n1 0\n0 -1i\n");
  const ComplexMatrix m = read_matrix(ok);
  CHECK(m(1, 1) == Complex(0, -1));
}
