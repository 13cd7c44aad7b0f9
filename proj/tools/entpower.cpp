#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "cli/config.hpp"
#include "cli/experiments.hpp"
#include "cli/figures.hpp"

namespace {

using namespace entpower;
using namespace entpower::cli;

constexpr int kConfigFailure = 2;
constexpr int kVerifyFailure = 3;

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool config_required) {
  auto* opt = cmd->add_option("--config", flags.config, "experiment file (INI sections)");
  if (config_required) {
    opt->required();
  }
  cmd->add_option("--seed", flags.seed, "master seed");
  cmd->add_option("--jobs", flags.jobs, "worker threads; results do not depend on it")->check(CLI::PositiveNumber);
  cmd->add_option("--out", flags.out, "output CSV (stdout when omitted); a directory for reproduce");
}

ExperimentConfig configured(const CommonFlags& flags, std::optional<ExperimentKind> expected) {
  ExperimentConfig cfg = load_config(flags.config);
  if (expected && cfg.kind != *expected) {
    throw ConfigError("experiment", "file declares '" + to_string(cfg.kind) + "' but the subcommand is '" +
                                        to_string(*expected) + "'");
  }
  if (flags.seed) {
    cfg.seed = *flags.seed;
  }
  if (flags.jobs) {
    cfg.optimizer.jobs = *flags.jobs;
  }
  if (!flags.out.empty()) {
    cfg.out = flags.out;
  }
  validate(cfg);
  return cfg;
}

int reproduce(const std::string& figure, const CommonFlags& flags, const ReproduceOptions& base, bool verify) {
  ReproduceOptions options = base;
  if (flags.seed) {
    options.seed = *flags.seed;
  }
  if (flags.jobs) {
    options.jobs = *flags.jobs;
  }
  const FigureReport report = reproduce_figure(figure, options);
  for (const auto& path : write_figure(report, flags.out.empty() ? "." : flags.out)) {
    std::cout << "wrote " << path.string() << '\n';
  }
  bool all_passed = true;
  for (const ShapeCheck& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << report.id << ": " << c.name;
    if (!c.detail.empty()) {
      std::cout << " [" << c.detail << "]";
    }
    std::cout << '\n';
    all_passed = all_passed && c.passed;
  }
  return verify && !all_passed ? kVerifyFailure : EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangling power of imperfect and noisy quantum gates"};
  app.require_subcommand(1);

  CommonFlags flags;
  ReproduceOptions repro;
  bool verify = false;
  std::string figure;

  struct Direct {
    const char* name;
    const char* help;
    ExperimentKind kind;
  };
  const Direct direct[] = {
      {"power", "maximize the entanglement produced from product inputs", ExperimentKind::Power},
      {"quench", "average the power over Gaussian parameter disorder", ExperimentKind::Quench},
      {"noisy", "power with local noise acting on the input", ExperimentKind::Noisy},
      {"survey", "power distribution over random gates", ExperimentKind::Survey},
  };
  std::vector<std::pair<CLI::App*, ExperimentKind>> direct_cmds;
  for (const Direct& d : direct) {
    CLI::App* cmd = app.add_subcommand(d.name, d.help);
    add_common(cmd, flags, true);
    direct_cmds.emplace_back(cmd, d.kind);
  }

  CLI::App* run = app.add_subcommand("run", "run whatever experiment the config declares");
  add_common(run, flags, true);
  run->add_flag("--verify", verify, "exit nonzero when a reproduced figure fails a shape check");

  CLI::App* repro_cmd = app.add_subcommand("reproduce", "regenerate the data behind a figure (fig2 .. fig15)");
  add_common(repro_cmd, flags, false);
  repro_cmd->add_option("figure", figure, "figure id")->required();
  repro_cmd->add_flag("--verify", verify, "exit nonzero when a shape check fails");
  repro_cmd->add_option("--realizations", repro.realizations, "quench realizations per point")
      ->check(CLI::PositiveNumber);
  repro_cmd->add_option("--restarts", repro.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
  repro_cmd->add_option("--gates", repro.gates, "random gates in the survey figure")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [cmd, kind] : direct_cmds) {
      if (cmd->parsed()) {
        const ExperimentConfig cfg = configured(flags, kind);
        write_outputs(run_experiment(cfg), cfg.out);
        return EXIT_SUCCESS;
      }
    }
    if (run->parsed()) {
      const ExperimentConfig cfg = configured(flags, std::nullopt);
      if (cfg.kind == ExperimentKind::Reproduce) {
        CommonFlags from_file = flags;
        from_file.seed = cfg.seed;
        from_file.out = cfg.out.string();
        return reproduce(cfg.figure, from_file, repro, verify);
      }
      write_outputs(run_experiment(cfg), cfg.out);
      return EXIT_SUCCESS;
    }
    return reproduce(figure, flags, repro, verify);
  } catch (const ConfigError& e) {
    std::cerr << "error: invalid configuration: " << e.what() << '\n';
    return kConfigFailure;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
}
