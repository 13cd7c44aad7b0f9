#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entpower/power.hpp"

namespace entpower::cli {

enum class ExperimentKind { Power, Quench, Noisy, Survey, Reproduce };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& text);

/// Thrown for configuration problems; `field` names the offending key.
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

/// Sweep of one channel kind over strengths p, applied to the listed targets.
struct NoiseSweep {
  ChannelKind kind = ChannelKind::Identity;
  std::vector<int> targets;
  std::vector<double> strengths;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Power;
  std::uint64_t seed = 0;
  std::filesystem::path out;

  GateSpec gate;
  MeasureSpec measure;
  InputSet input_set = InputSet::FullySeparable;

  /// Fixed channels, applied in every run.
  std::vector<ChannelSpec> channels;
  std::optional<NoiseSweep> sweep;

  OptimizerConfig optimizer;

  QuenchConfig quench;
  /// Disorder strengths to sweep; sds = sigma * disordered for each entry.
  std::vector<double> sigmas;
  std::vector<double> disordered;

  SurveyConfig survey;

  std::string figure;
};

/// Parses INI text. Keys: a top-level `experiment` and `seed`/`out`, then
/// sections [gate], [measure], [input], [noise], [optimizer], [quench], [survey].
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Cross-field checks (GGM without channels, parameter counts, ...).
void validate(const ExperimentConfig& cfg);

/// Comma-separated numbers, e.g. "0, 0.25, 3.14159".
std::vector<double> parse_list(const std::string& field, const std::string& text);

}  // namespace entpower::cli
