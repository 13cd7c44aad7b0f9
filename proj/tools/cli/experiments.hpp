#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cli/config.hpp"
#include "cli/table.hpp"

namespace entpower::cli {

/// A table together with the file stem it is written under.
struct NamedTable {
  std::string name;
  Table table;
};

std::vector<NamedTable> run_power(const ExperimentConfig& cfg);
std::vector<NamedTable> run_noisy(const ExperimentConfig& cfg);
std::vector<NamedTable> run_quench(const ExperimentConfig& cfg);
std::vector<NamedTable> run_survey(const ExperimentConfig& cfg);

/// Dispatches on cfg.kind (everything but reproduce).
std::vector<NamedTable> run_experiment(const ExperimentConfig& cfg);

/// Writes the first table to `out` (stdout when empty) and any further ones
/// next to it as <stem>_<name>.csv.
void write_outputs(const std::vector<NamedTable>& tables, const std::filesystem::path& out);

}  // namespace entpower::cli
