#pragma once

#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace entpower {

template <typename Scalar>
using ComplexT = std::complex<Scalar>;

template <typename Scalar>
using ComplexMatrixT = Eigen::Matrix<ComplexT<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVectorT = Eigen::Matrix<ComplexT<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = ComplexT<double>;
using ComplexMatrix = ComplexMatrixT<double>;
using ComplexVector = ComplexVectorT<double>;
using RealVector = RealVectorT<double>;

/// Pure multi-qubit state over the 2^N computational basis.
using StateVector = ComplexVector;
/// Hermitian unit-trace operator.
using DensityMatrix = ComplexMatrix;

/// Thrown when an argument violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of local dimensions of a composite system.
///
/// Subsystem 0 is the most significant digit of a basis index, so
/// `kron(a, b)` places `a` on subsystem 0.
class SubsystemLayout {
public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<int> local_dims) : dims_(std::move(local_dims)) {
    if (dims_.empty()) {
      throw InvalidArgument("SubsystemLayout: no subsystems");
    }
    for (int d : dims_) {
      if (d < 1) {
        throw InvalidArgument("SubsystemLayout: local dimension must be positive");
      }
    }
  }

  static SubsystemLayout qubits(int n) { return SubsystemLayout(std::vector<int>(static_cast<std::size_t>(n), 2)); }

  /// Layout for an N-qubit system of the given total dimension.
  static SubsystemLayout for_dimension(Eigen::Index dim) {
    int n = 0;
    Eigen::Index d = 1;
    while (d < dim) {
      d *= 2;
      ++n;
    }
    if (d != dim || n == 0) {
      throw InvalidArgument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    return qubits(n);
  }

  int size() const { return static_cast<int>(dims_.size()); }
  int local_dim(int k) const { return dims_.at(static_cast<std::size_t>(k)); }
  const std::vector<int>& local_dims() const { return dims_; }

  Eigen::Index total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), Eigen::Index{1}, std::multiplies<>());
  }

  /// Stride of subsystem k in a flattened basis index.
  Eigen::Index stride(int k) const {
    Eigen::Index s = 1;
    for (int j = size() - 1; j > k; --j) {
      s *= dims_[static_cast<std::size_t>(j)];
    }
    return s;
  }

  bool operator==(const SubsystemLayout&) const = default;

private:
  std::vector<int> dims_;
};

}  // namespace entpower
