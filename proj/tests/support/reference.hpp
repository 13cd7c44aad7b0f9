#pragma once

// Independent reference implementations used only as test oracles. None of
// these share code paths with the library beyond Eigen's basic arithmetic.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace reference {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Cyclic Jacobi eigenvalues of a Hermitian matrix, via its real symmetric
/// embedding [[A, -B], [B, A]] whose spectrum repeats each eigenvalue twice.
inline std::vector<double> jacobi_eigenvalues(const CMatrix& h, int sweeps = 100) {
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd a(2 * n, 2 * n);
  a << h.real(), -h.imag(), h.imag(), h.real();
  const Eigen::Index m = 2 * n;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < m; ++p) {
      for (Eigen::Index q = p + 1; q < m; ++q) {
        off += a(p, q) * a(p, q);
      }
    }
    if (off < 1e-30) {
      break;
    }
    for (Eigen::Index p = 0; p < m; ++p) {
      for (Eigen::Index q = p + 1; q < m; ++q) {
        if (std::abs(a(p, q)) < 1e-300) {
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < m; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < m; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> diag(static_cast<std::size_t>(m));
  for (Eigen::Index k = 0; k < m; ++k) {
    diag[static_cast<std::size_t>(k)] = a(k, k);
  }
  std::sort(diag.begin(), diag.end(), std::greater<>());
  std::vector<double> out;
  for (std::size_t k = 0; k < diag.size(); k += 2) {
    out.push_back(0.5 * (diag[k] + diag[k + 1]));
  }
  return out;
}

inline CMatrix pauli(int k) {
  CMatrix s(2, 2);
  switch (k) {
    case 1:
      s << 0, 1, 1, 0;
      break;
    case 2:
      s << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 3:
      s << 1, 0, 0, -1;
      break;
    default:
      s = CMatrix::Identity(2, 2);
  }
  return s;
}

inline CMatrix kron2(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// exp[-i (j1 XX + j2 YY + j3 ZZ)] by the matrix exponential.
inline CMatrix canonical_by_expm(double j1, double j2, double j3) {
  const CMatrix g = j1 * kron2(pauli(1), pauli(1)) + j2 * kron2(pauli(2), pauli(2)) + j3 * kron2(pauli(3), pauli(3));
  const CMatrix arg = Complex(0, -1) * g;
  return arg.exp();
}

/// Partial transpose on qubit k of an n-qubit operator, by explicit bit swaps
/// (qubit 0 is the most significant bit).
inline CMatrix partial_transpose_bits(const CMatrix& rho, int k, int n) {
  const int shift = n - 1 - k;
  CMatrix out(rho.rows(), rho.cols());
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      const Eigen::Index br = (r >> shift) & 1;
      const Eigen::Index bc = (c >> shift) & 1;
      const Eigen::Index r2 = (r & ~(Eigen::Index{1} << shift)) | (bc << shift);
      const Eigen::Index c2 = (c & ~(Eigen::Index{1} << shift)) | (br << shift);
      out(r2, c2) = rho(r, c);
    }
  }
  return out;
}

/// Trace-norm negativity across qubit k: (||rho^{T_k}||_1 - 1) / 2 from singular values.
inline double negativity_trace_norm(const CMatrix& rho, int k, int n) {
  const CMatrix pt = partial_transpose_bits(rho, k, n);
  Eigen::JacobiSVD<CMatrix> svd(pt);
  return 0.5 * (svd.singularValues().sum() - 1.0);
}

/// Largest squared Schmidt coefficient across the cut {first `m` qubits} : rest.
inline double max_schmidt_leading(const CVector& psi, int m, int n) {
  const Eigen::Index rows = Eigen::Index{1} << m;
  const Eigen::Index cols = Eigen::Index{1} << (n - m);
  CMatrix c(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      c(i, j) = psi(i * cols + j);
    }
  }
  Eigen::JacobiSVD<CMatrix> svd(c);
  return svd.singularValues()(0) * svd.singularValues()(0);
}

/// Permutes qubits of a state so that `order[k]` moves to position k.
inline CVector permute_qubits(const CVector& psi, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  CVector out(psi.size());
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    Eigen::Index target = 0;
    for (int k = 0; k < n; ++k) {
      const Eigen::Index bit = (idx >> (n - 1 - order[static_cast<std::size_t>(k)])) & 1;
      target |= bit << (n - 1 - k);
    }
    out(target) = psi(idx);
  }
  return out;
}

/// GGM of a pure n-qubit state by enumerating every subset and permuting it to the front.
inline double ggm_by_svd(const CVector& psi, int n) {
  double best = 0.0;
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    std::vector<int> order;
    for (int k = 0; k < n; ++k) {
      if (mask & (1 << k)) {
        order.push_back(k);
      }
    }
    const int m = static_cast<int>(order.size());
    for (int k = 0; k < n; ++k) {
      if (!(mask & (1 << k))) {
        order.push_back(k);
      }
    }
    best = std::max(best, max_schmidt_leading(permute_qubits(psi, order), m, n));
  }
  return 1.0 - best;
}

/// Random density matrix from a Ginibre draw: G G^dagger / tr.
template <typename Rng>
CMatrix random_density(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = Complex(normal(rng), normal(rng));
    }
  }
  CMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

template <typename Rng>
CVector random_pure(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = Complex(normal(rng), normal(rng));
  }
  return v.normalized();
}

}  // namespace reference
