#pragma once

#include <string>
#include <vector>

#include "entpower/types.hpp"

namespace entpower {

enum class ChannelKind { Identity, AmplitudeDamping, PhaseDamping, Depolarizing };

std::string to_string(ChannelKind kind);
/// Accepts "id", "adc", "pdc", "dpc".
ChannelKind parse_channel_kind(const std::string& text);

/// A single-qubit channel of strength p acting on one target qubit.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::Identity;
  double p = 0.0;
  int target = 0;

  /// "kind:p:target", e.g. "adc:0.4:0".
  static ChannelSpec parse(const std::string& text);
  std::string str() const;
};

/// Kraus operators of a single-qubit channel. ADC and PDC give two, DPC four.
std::vector<ComplexMatrix> kraus_set(ChannelKind kind, double p);

/// Applies the channel to its target qubit, identity elsewhere.
DensityMatrix apply_local(const DensityMatrix& rho, const ChannelSpec& spec, const SubsystemLayout& layout);

/// Applies the channels in order.
DensityMatrix apply_all(const DensityMatrix& rho, const std::vector<ChannelSpec>& specs, const SubsystemLayout& layout);

/// The same channel on every qubit of an N-qubit register.
std::vector<ChannelSpec> on_all_qubits(ChannelKind kind, double p, int qubits);

}  // namespace entpower
