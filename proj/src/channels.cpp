#include "entpower/channels.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

namespace entpower {

namespace {

void check_strength(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("channel strength p must lie in [0, 1]");
  }
}

// (K acting on `target`) * m, for a local operator K of size d x d.
ComplexMatrix apply_left(const ComplexMatrix& k, const ComplexMatrix& m, int target, const SubsystemLayout& layout) {
  const Eigen::Index stride = layout.stride(target);
  const int d = layout.local_dim(target);
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const int di = static_cast<int>((i / stride) % d);
    const Eigen::Index base = i - di * stride;
    out.row(i).setZero();
    for (int dj = 0; dj < d; ++dj) {
      const Complex coeff = k(di, dj);
      if (coeff != Complex(0.0, 0.0)) {
        out.row(i) += coeff * m.row(base + dj * stride);
      }
    }
  }
  return out;
}

}  // namespace

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::Identity:
      return "id";
    case ChannelKind::AmplitudeDamping:
      return "adc";
    case ChannelKind::PhaseDamping:
      return "pdc";
    case ChannelKind::Depolarizing:
      return "dpc";
  }
  return "unknown";
}

ChannelKind parse_channel_kind(const std::string& text) {
  for (ChannelKind k : {ChannelKind::Identity, ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
                        ChannelKind::Depolarizing}) {
    if (to_string(k) == text) {
      return k;
    }
  }
  throw InvalidArgument("unknown channel '" + text + "' (expected id, adc, pdc or dpc)");
}

ChannelSpec ChannelSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  std::string p;
  std::string target;
  if (!std::getline(in, kind, ':') || !std::getline(in, p, ':') || !std::getline(in, target)) {
    throw InvalidArgument("channel '" + text + "' is not of the form kind:p:target");
  }
  ChannelSpec spec;
  spec.kind = parse_channel_kind(kind);
  try {
    spec.p = std::stod(p);
    spec.target = std::stoi(target);
  } catch (const std::exception&) {
    throw InvalidArgument("channel '" + text + "' has a malformed strength or target");
  }
  check_strength(spec.p);
  return spec;
}

std::string ChannelSpec::str() const {
  // Shortest text that reads back to the same double.
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), p);
  return to_string(kind) + ':' + std::string(buf.data(), res.ptr) + ':' + std::to_string(target);
}

std::vector<ComplexMatrix> kraus_set(ChannelKind kind, double p) {
  check_strength(p);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix x(2, 2);
  ComplexMatrix y(2, 2);
  ComplexMatrix z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;

  switch (kind) {
    case ChannelKind::Identity:
      return {id};
    case ChannelKind::AmplitudeDamping: {
      ComplexMatrix k0(2, 2);
      ComplexMatrix k1(2, 2);
      k0 << 1, 0, 0, std::sqrt(1.0 - p);
      k1 << 0, std::sqrt(p), 0, 0;
      return {k0, k1};
    }
    case ChannelKind::PhaseDamping:
      return {std::sqrt(1.0 - p / 2.0) * id, std::sqrt(p / 2.0) * z};
    case ChannelKind::Depolarizing: {
      const double w = std::sqrt(p / 4.0);
      return {std::sqrt(1.0 - 3.0 * p / 4.0) * id, w * x, w * y, w * z};
    }
  }
  throw InvalidArgument("unknown channel kind");
}

DensityMatrix apply_local(const DensityMatrix& rho, const ChannelSpec& spec, const SubsystemLayout& layout) {
  if (rho.rows() != rho.cols() || rho.rows() != layout.total_dim()) {
    throw InvalidArgument("apply_local: state dimension does not match layout");
  }
  if (spec.target < 0 || spec.target >= layout.size()) {
    throw InvalidArgument("apply_local: target qubit " + std::to_string(spec.target) + " out of range");
  }
  if (layout.local_dim(spec.target) != 2) {
    throw InvalidArgument("apply_local: target is not a qubit");
  }
  if (spec.kind == ChannelKind::Identity) {
    check_strength(spec.p);
    return rho;
  }
  DensityMatrix out = DensityMatrix::Zero(rho.rows(), rho.cols());
  for (const ComplexMatrix& k : kraus_set(spec.kind, spec.p)) {
    const ComplexMatrix left = apply_left(k, rho, spec.target, layout);
    out += apply_left(k, left.adjoint(), spec.target, layout).adjoint();
  }
  return out;
}

DensityMatrix apply_all(const DensityMatrix& rho, const std::vector<ChannelSpec>& specs,
                        const SubsystemLayout& layout) {
  DensityMatrix out = rho;
  for (const ChannelSpec& spec : specs) {
    out = apply_local(out, spec, layout);
  }
  return out;
}

std::vector<ChannelSpec> on_all_qubits(ChannelKind kind, double p, int qubits) {
  std::vector<ChannelSpec> specs;
  for (int q = 0; q < qubits; ++q) {
    specs.push_back({kind, p, q});
  }
  return specs;
}

}  // namespace entpower
