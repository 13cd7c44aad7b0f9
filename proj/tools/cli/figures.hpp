#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cli/experiments.hpp"

namespace entpower::cli {

struct ReproduceOptions {
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Overrides the per-figure defaults when set.
  std::optional<int> realizations;
  std::optional<int> restarts;
  std::optional<int> gates;
};

/// Outcome of one qualitative check on a reproduced figure.
struct ShapeCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FigureReport {
  std::string id;
  std::vector<NamedTable> tables;
  std::vector<ShapeCheck> checks;
};

/// Biseparable power of a diagonal gate whose search also starts from the
/// fully separable optimum. Diagonal gates and the local channels commute with
/// Z rotations, and the measures ignore local unitaries, so that optimum can be
/// rotated into the biseparable family without changing its value.
PowerResult diagonal_bisep_power(const PowerProblem& problem, const OptimizerConfig& cfg);

/// fig2 .. fig15.
std::vector<std::string> figure_ids();

/// Throws ConfigError("figure", ...) listing the known ids for anything else.
FigureReport reproduce_figure(const std::string& id, const ReproduceOptions& options);

/// Writes every table as <dir>/<id>_<name>.csv and returns the paths.
std::vector<std::filesystem::path> write_figure(const FigureReport& report, const std::filesystem::path& dir);

}  // namespace entpower::cli
