#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "entpower/types.hpp"

namespace entpower {

/// Kronecker product; `a` acts on the leading (most significant) factor.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(const Eigen::MatrixBase<DerivedA>& a,
                                                                              const Eigen::MatrixBase<DerivedB>& b) {
  using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Result out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace detail {

inline void check_square_layout(Eigen::Index rows, Eigen::Index cols, const SubsystemLayout& layout,
                                const char* what) {
  if (rows != cols) {
    throw InvalidArgument(std::string(what) + ": matrix is not square");
  }
  if (rows != layout.total_dim()) {
    throw InvalidArgument(std::string(what) + ": matrix dimension " + std::to_string(rows) +
                          " does not match layout dimension " + std::to_string(layout.total_dim()));
  }
}

inline int digit(Eigen::Index index, const SubsystemLayout& layout, int k) {
  return static_cast<int>((index / layout.stride(k)) % layout.local_dim(k));
}

}  // namespace detail

/// Partial transpose with respect to one subsystem. Involutive and trace preserving.
template <typename Derived>
typename Derived::PlainObject partial_transpose(const Eigen::MatrixBase<Derived>& rho, int subsystem,
                                                const SubsystemLayout& layout) {
  detail::check_square_layout(rho.rows(), rho.cols(), layout, "partial_transpose");
  if (subsystem < 0 || subsystem >= layout.size()) {
    throw InvalidArgument("partial_transpose: subsystem " + std::to_string(subsystem) + " out of range");
  }
  const Eigen::Index stride = layout.stride(subsystem);
  typename Derived::PlainObject out(rho.rows(), rho.cols());
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    const int di = detail::digit(i, layout, subsystem);
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      const int dj = detail::digit(j, layout, subsystem);
      const Eigen::Index ti = i + (dj - di) * stride;
      const Eigen::Index tj = j + (di - dj) * stride;
      out(ti, tj) = rho(i, j);
    }
  }
  return out;
}

/// Reduced operator on the subsystems listed in `keep` (in layout order).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> partial_trace(
    const Eigen::MatrixBase<Derived>& rho, const std::set<int>& keep, const SubsystemLayout& layout) {
  detail::check_square_layout(rho.rows(), rho.cols(), layout, "partial_trace");
  if (keep.empty()) {
    throw InvalidArgument("partial_trace: empty keep set");
  }
  if (*keep.begin() < 0 || *keep.rbegin() >= layout.size()) {
    throw InvalidArgument("partial_trace: subsystem index out of range");
  }

  const Eigen::Index total = layout.total_dim();
  std::vector<Eigen::Index> kept_index(static_cast<std::size_t>(total));
  std::vector<Eigen::Index> traced_index(static_cast<std::size_t>(total));
  Eigen::Index kept_dim = 1;
  for (int k : keep) {
    kept_dim *= layout.local_dim(k);
  }
  for (Eigen::Index i = 0; i < total; ++i) {
    Eigen::Index kept = 0;
    Eigen::Index traced = 0;
    for (int k = 0; k < layout.size(); ++k) {
      const int d = detail::digit(i, layout, k);
      if (keep.count(k) != 0) {
        kept = kept * layout.local_dim(k) + d;
      } else {
        traced = traced * layout.local_dim(k) + d;
      }
    }
    kept_index[static_cast<std::size_t>(i)] = kept;
    traced_index[static_cast<std::size_t>(i)] = traced;
  }

  using Result = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Result out = Result::Zero(kept_dim, kept_dim);
  for (Eigen::Index i = 0; i < total; ++i) {
    for (Eigen::Index j = 0; j < total; ++j) {
      if (traced_index[static_cast<std::size_t>(i)] == traced_index[static_cast<std::size_t>(j)]) {
        out(kept_index[static_cast<std::size_t>(i)], kept_index[static_cast<std::size_t>(j)]) += rho(i, j);
      }
    }
  }
  return out;
}

/// Largest entrywise deviation of `a` from its adjoint.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) {
    return 0;
  }
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

constexpr double kHermitianTolerance = 1e-10;

/// Real spectrum of a Hermitian matrix, sorted in descending order.
///
/// The input is symmetrized as (a + a^dagger)/2 before the solve; inputs whose
/// Hermiticity defect exceeds 1e-10 are rejected.
template <typename Derived>
RealVectorT<typename Eigen::NumTraits<typename Derived::Scalar>::Real> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != a.cols()) {
    throw InvalidArgument("hermitian_eigenvalues: matrix is not square");
  }
  if (hermiticity_defect(a) > Real(kHermitianTolerance)) {
    throw InvalidArgument("hermitian_eigenvalues: matrix is not Hermitian within tolerance");
  }
  const Plain sym = (a + a.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<Plain> solver(sym, Eigen::EigenvaluesOnly);
  RealVectorT<Real> values = solver.eigenvalues().reverse();
  return values;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol) {
  if (u.rows() != u.cols()) {
    throw InvalidArgument("is_unitary: matrix is not square");
  }
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Plain defect = u.adjoint() * u - Plain::Identity(u.rows(), u.cols());
  return defect.size() == 0 || defect.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace entpower
