#include "entpower/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entpower/tensor.hpp"

namespace entpower {

namespace {

constexpr double kNormTolerance = 1e-10;

void check_unit_trace(const DensityMatrix& rho, const char* what) {
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kNormTolerance) {
    throw InvalidArgument(std::string(what) + ": state does not have unit trace");
  }
}

void check_normalized(const StateVector& psi, const char* what) {
  if (std::abs(psi.norm() - 1.0) > kNormTolerance) {
    throw InvalidArgument(std::string(what) + ": state vector is not normalized");
  }
}

double negative_part(const RealVector& eigenvalues) {
  double sum = 0.0;
  for (double v : eigenvalues) {
    if (v < -kNegativeEigenvalueCutoff) {
      sum -= v;
    }
  }
  return sum;
}

}  // namespace

std::set<int> Bipartition::side_b(const SubsystemLayout& layout) const {
  std::set<int> out;
  for (int k = 0; k < layout.size(); ++k) {
    if (side_a.count(k) == 0) {
      out.insert(k);
    }
  }
  return out;
}

void Bipartition::validate(const SubsystemLayout& layout) const {
  if (side_a.empty()) {
    throw InvalidArgument("bipartition: side A is empty");
  }
  if (*side_a.begin() < 0 || *side_a.rbegin() >= layout.size()) {
    throw InvalidArgument("bipartition: subsystem index out of range");
  }
  if (static_cast<int>(side_a.size()) == layout.size()) {
    throw InvalidArgument("bipartition: side B is empty");
  }
}

std::vector<Bipartition> Bipartition::all_cuts(const SubsystemLayout& layout) {
  const int n = layout.size();
  std::vector<Bipartition> cuts;
  if (n < 2) {
    return cuts;
  }
  // Masks over the first n-1 parties; the last party always sits on side B.
  for (unsigned mask = 1; mask < (1U << static_cast<unsigned>(n - 1)); ++mask) {
    Bipartition cut;
    for (int k = 0; k < n - 1; ++k) {
      if ((mask >> static_cast<unsigned>(k)) & 1U) {
        cut.side_a.insert(k);
      }
    }
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

double negativity(const DensityMatrix& rho, const Bipartition& cut, const SubsystemLayout& layout) {
  cut.validate(layout);
  check_unit_trace(rho, "negativity");
  // Transposing either side gives the same spectrum; pick the smaller one.
  std::set<int> side = cut.side_a;
  const std::set<int> other = cut.side_b(layout);
  if (other.size() < side.size()) {
    side = other;
  }
  DensityMatrix pt = rho;
  for (int k : side) {
    pt = partial_transpose(pt, k, layout);
  }
  return negative_part(hermitian_eigenvalues(pt));
}

double monogamy_score_neg_sq(const DensityMatrix& rho, int nodal, const SubsystemLayout& layout) {
  const int n = layout.size();
  if (n < 3) {
    throw InvalidArgument("monogamy_score_neg_sq: needs at least three parties");
  }
  if (nodal < 0 || nodal >= n) {
    throw InvalidArgument("monogamy_score_neg_sq: nodal party out of range");
  }
  const double whole = negativity(rho, Bipartition{{nodal}}, layout);
  double score = whole * whole;
  for (int i = 0; i < n; ++i) {
    if (i == nodal) {
      continue;
    }
    const DensityMatrix marginal = partial_trace(rho, {nodal, i}, layout);
    const SubsystemLayout marginal_layout({layout.local_dim(std::min(nodal, i)), layout.local_dim(std::max(nodal, i))});
    const double pair = negativity(marginal, Bipartition{{0}}, marginal_layout);
    score -= pair * pair;
  }
  return score;
}

RealVector schmidt_eigenvalues(const StateVector& psi, const Bipartition& cut, const SubsystemLayout& layout) {
  cut.validate(layout);
  if (psi.size() != layout.total_dim()) {
    throw InvalidArgument("schmidt_eigenvalues: state dimension does not match layout");
  }
  check_normalized(psi, "schmidt_eigenvalues");

  std::set<int> small = cut.side_a;
  std::set<int> large = cut.side_b(layout);
  if (large.size() < small.size()) {
    std::swap(small, large);
  }
  Eigen::Index small_dim = 1;
  Eigen::Index large_dim = 1;
  for (int k : small) {
    small_dim *= layout.local_dim(k);
  }
  for (int k : large) {
    large_dim *= layout.local_dim(k);
  }

  // Coefficient matrix psi_{ab} with a on the small side.
  ComplexMatrix coeffs = ComplexMatrix::Zero(small_dim, large_dim);
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    Eigen::Index a = 0;
    Eigen::Index b = 0;
    for (int k = 0; k < layout.size(); ++k) {
      const int d = detail::digit(i, layout, k);
      if (small.count(k) != 0) {
        a = a * layout.local_dim(k) + d;
      } else {
        b = b * layout.local_dim(k) + d;
      }
    }
    coeffs(a, b) = psi(i);
  }
  const ComplexMatrix reduced = coeffs * coeffs.adjoint();
  RealVector values = hermitian_eigenvalues(reduced);
  return values.cwiseMax(0.0);
}

double ggm(const StateVector& psi, const SubsystemLayout& layout) {
  if (layout.size() < 2) {
    throw InvalidArgument("ggm: needs at least two parties");
  }
  check_normalized(psi, "ggm");
  double largest = 0.0;
  for (const Bipartition& cut : Bipartition::all_cuts(layout)) {
    largest = std::max(largest, schmidt_eigenvalues(psi, cut, layout)(0));
  }
  return 1.0 - largest;
}

}  // namespace entpower
