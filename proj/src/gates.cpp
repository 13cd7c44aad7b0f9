#include "entpower/gates.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "entpower/tensor.hpp"

namespace entpower {

namespace {

bool is_power_of_two(Eigen::Index n) { return n >= 2 && (n & (n - 1)) == 0; }

// Row-major, four decimals per part, exactly as tabulated.
constexpr std::array<const char*, 5> kFixtureHaar = {
    R"(dim 4
-0.1328+0.2848i +0.3609-0.0663i +0.0975-0.3560i -0.3627-0.7063i
+0.1582+0.4851i -0.2756-0.2412i +0.2530-0.6070i +0.3639+0.2016i
-0.3395+0.1700i -0.6838-0.3707i -0.1359+0.3228i -0.0112-0.3579i
-0.7048+0.0060i -0.0797+0.3463i -0.3833-0.4022i -0.0754+0.2502i
)",
    R"(dim 4
-0.3105-0.4472i -0.2782+0.2450i +0.2835+0.3510i -0.6021-0.0030i
+0.4682-0.0869i -0.5794+0.1892i -0.1666-0.0687i +0.0463+0.6059i
-0.0522-0.6011i +0.2999-0.6057i -0.0134-0.0419i +0.0555+0.4173i
-0.3121-0.1243i +0.0490+0.1786i -0.7670-0.4167i -0.3008-0.0207i
)",
    R"(dim 4
+0.1515-0.0973i +0.1520+0.2570i +0.1770-0.7953i -0.0386-0.4617i
+0.0142+0.4815i +0.0317+0.7051i -0.4129+0.0758i +0.3059-0.0082i
+0.5406+0.5763i -0.3954-0.2356i -0.0320-0.0407i -0.3844-0.1154i
-0.3255-0.0724i -0.1310+0.4286i +0.2146+0.3336i -0.6472-0.3344i
)",
    R"(dim 4
+0.4815+0.2728i -0.1891+0.2117i +0.6345-0.4073i +0.0803-0.1952i
+0.3253-0.2366i -0.6629-0.2381i -0.1767+0.2749i -0.2700-0.4031i
-0.2068-0.2555i +0.4632+0.0266i +0.3072+0.1931i -0.0981-0.7317i
-0.5813+0.2931i -0.3827+0.2482i -0.2519-0.3599i +0.1469-0.3918i
)",
    R"(dim 4
+0.0126-0.3590i +0.0075+0.5262i +0.1540-0.6068i -0.3297+0.3056i
+0.8058+0.3372i +0.0757+0.2171i -0.3882-0.1587i +0.0588-0.0688i
-0.0408-0.2034i +0.0895+0.2377i +0.2034-0.2737i +0.6738-0.5676i
+0.0709-0.2447i -0.5141-0.5843i -0.2809-0.4869i +0.1134+0.0255i
)",
};

constexpr double kFixedInputTolerance = 1e-3;

}  // namespace

ComplexMatrix diag_unitary(std::span<const double> phis, Eigen::Index dim) {
  if (!is_power_of_two(dim)) {
    throw InvalidArgument("diag_unitary: dimension " + std::to_string(dim) + " is not a power of two");
  }
  if (static_cast<Eigen::Index>(phis.size()) > dim) {
    throw InvalidArgument("diag_unitary: more phases than diagonal slots");
  }
  ComplexVector diagonal = ComplexVector::Ones(dim);
  const Eigen::Index offset = dim - static_cast<Eigen::Index>(phis.size());
  for (std::size_t k = 0; k < phis.size(); ++k) {
    diagonal(offset + static_cast<Eigen::Index>(k)) = std::polar(1.0, phis[k]);
  }
  return diagonal.asDiagonal();
}

ComplexMatrix diag_unitary(std::span<const double> phis) {
  return diag_unitary(phis, static_cast<Eigen::Index>(phis.size()));
}

ComplexMatrix canonical_nl(double j1, double j2, double j3) {
  const double r = 1.0 / std::sqrt(2.0);
  // Bell basis: Phi+, Phi-, Psi+, Psi- as columns.
  Eigen::Matrix4cd bell;
  bell << r, r, 0, 0,  //
      0, 0, r, r,      //
      0, 0, r, -r,     //
      r, -r, 0, 0;
  // Generator eigenvalues on each Bell state.
  const Eigen::Vector4d lambda(j1 - j2 + j3, -j1 + j2 + j3, j1 + j2 - j3, -j1 - j2 - j3);
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) {
    phases(k) = std::polar(1.0, -lambda(k));
  }
  return bell * phases.asDiagonal() * bell.adjoint();
}

ComplexMatrix transposition_unitary(Eigen::Index i, Eigen::Index j, Eigen::Index dim) {
  if (dim < 1 || i < 0 || j < 0 || i >= dim || j >= dim) {
    throw InvalidArgument("transposition_unitary: index out of range");
  }
  if (i == j) {
    throw InvalidArgument("transposition_unitary: indices must differ");
  }
  ComplexMatrix p = ComplexMatrix::Identity(dim, dim);
  p(i, i) = 0.0;
  p(j, j) = 0.0;
  p(i, j) = 1.0;
  p(j, i) = 1.0;
  return p;
}

ComplexMatrix haar_random(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 1) {
    throw InvalidArgument("haar_random: dimension must be positive");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix ginibre(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      ginibre(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
  const ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  ComplexVector phase(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    phase(k) = mag > 0.0 ? r(k, k) / mag : Complex(1.0, 0.0);
  }
  return q * phase.asDiagonal();
}

ComplexMatrix fixture_haar(int k) {
  if (k < 1 || k > static_cast<int>(kFixtureHaar.size())) {
    throw InvalidArgument("fixture_haar: index must be in 1..5");
  }
  std::istringstream in(kFixtureHaar[static_cast<std::size_t>(k - 1)]);
  return read_matrix(in);
}

ComplexMatrix nearest_unitary(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

std::string to_string(GateFamily family) {
  switch (family) {
    case GateFamily::Diagonal:
      return "diagonal";
    case GateFamily::CanonicalNL:
      return "canonical";
    case GateFamily::Transposition:
      return "transposition";
    case GateFamily::HaarRandom:
      return "haar";
    case GateFamily::Fixed:
      return "fixed";
  }
  return "unknown";
}

GateFamily parse_gate_family(const std::string& text) {
  for (GateFamily f : {GateFamily::Diagonal, GateFamily::CanonicalNL, GateFamily::Transposition,
                       GateFamily::HaarRandom, GateFamily::Fixed}) {
    if (to_string(f) == text) {
      return f;
    }
  }
  throw InvalidArgument("unknown gate family '" + text +
                        "' (expected diagonal, canonical, transposition, haar or fixed)");
}

GateSpec GateSpec::diagonal(std::vector<double> phis, Eigen::Index dim) {
  GateSpec g;
  g.family = GateFamily::Diagonal;
  g.params = std::move(phis);
  g.dim = dim;
  return g;
}

GateSpec GateSpec::canonical(double j1, double j2, double j3) {
  GateSpec g;
  g.family = GateFamily::CanonicalNL;
  g.params = {j1, j2, j3};
  g.dim = 4;
  return g;
}

GateSpec GateSpec::transposition(Eigen::Index i, Eigen::Index j, Eigen::Index dim) {
  GateSpec g;
  g.family = GateFamily::Transposition;
  g.params = {static_cast<double>(i), static_cast<double>(j)};
  g.dim = dim;
  return g;
}

GateSpec GateSpec::haar(Eigen::Index dim, std::uint64_t seed) {
  GateSpec g;
  g.family = GateFamily::HaarRandom;
  g.dim = dim;
  g.seed = seed;
  return g;
}

GateSpec GateSpec::from_matrix(ComplexMatrix m) {
  if (m.rows() != m.cols() || !is_power_of_two(m.rows())) {
    throw InvalidArgument("fixed gate: matrix must be square with power-of-two dimension");
  }
  if (!is_unitary(m, kFixedInputTolerance)) {
    throw InvalidArgument("fixed gate: matrix is not unitary within 1e-3");
  }
  GateSpec g;
  g.family = GateFamily::Fixed;
  g.dim = m.rows();
  g.fixed = std::move(m);
  return g;
}

int GateSpec::qubits() const {
  return SubsystemLayout::for_dimension(dim).size();
}

GateSpec GateSpec::with_params(std::vector<double> new_params) const {
  GateSpec g = *this;
  g.params = std::move(new_params);
  return g;
}

ComplexMatrix GateSpec::matrix() const {
  switch (family) {
    case GateFamily::Diagonal:
      return diag_unitary(params, dim);
    case GateFamily::CanonicalNL:
      if (params.size() != 3) {
        throw InvalidArgument("canonical gate: expected three couplings J1 J2 J3");
      }
      return canonical_nl(params[0], params[1], params[2]);
    case GateFamily::Transposition:
      if (params.size() != 2) {
        throw InvalidArgument("transposition gate: expected two basis indices");
      }
      return transposition_unitary(static_cast<Eigen::Index>(std::lround(params[0])),
                                   static_cast<Eigen::Index>(std::lround(params[1])), dim);
    case GateFamily::HaarRandom:
      return haar_random(dim, seed);
    case GateFamily::Fixed:
      return nearest_unitary(fixed);
  }
  throw InvalidArgument("unknown gate family");
}

Complex parse_complex(const std::string& token) {
  const auto fail = [&token]() -> Complex { throw InvalidArgument("malformed complex entry '" + token + "'"); };
  if (token.empty()) {
    return fail();
  }
  if (token.back() != 'i' && token.back() != 'j') {
    std::size_t used = 0;
    double re = 0.0;
    try {
      re = std::stod(token, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != token.size()) {
      return fail();
    }
    return {re, 0.0};
  }
  const std::string body = token.substr(0, token.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? std::string() : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text == "+" || im_text == "-" || im_text.empty()) {
    im_text += "1";
  }
  try {
    std::size_t used = 0;
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) {
      return fail();
    }
    double re = 0.0;
    if (!re_text.empty()) {
      re = std::stod(re_text, &used);
      if (used != re_text.size()) {
        return fail();
      }
    }
    return {re, im};
  } catch (const std::exception&) {
    return fail();
  }
}

ComplexMatrix read_matrix(std::istream& in) {
  std::string keyword;
  Eigen::Index n = 0;
  if (!(in >> keyword >> n) || keyword != "dim" || n < 1) {
    throw InvalidArgument("matrix file: expected header 'dim N'");
  }
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      std::string token;
      if (!(in >> token)) {
        throw InvalidArgument("matrix file: expected " + std::to_string(n * n) + " entries");
      }
      m(i, j) = parse_complex(token);
    }
  }
  std::string extra;
  if (in >> extra) {
    throw InvalidArgument("matrix file: trailing data after " + std::to_string(n * n) + " entries");
  }
  return m;
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InvalidArgument("write_matrix: matrix is not square");
  }
  out << "dim " << m.rows() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      out << (j == 0 ? "" : " ") << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << 'i';
    }
    out << '\n';
  }
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidArgument("cannot open matrix file " + path.string());
  }
  return read_matrix(in);
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidArgument("cannot write matrix file " + path.string());
  }
  write_matrix(out, m);
}

}  // namespace entpower
