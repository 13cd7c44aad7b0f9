#include "cli/experiments.hpp"

#include <iostream>

namespace entpower::cli {

namespace {

std::vector<std::string> coordinate_columns(InputSet set, int qubits) {
  std::vector<std::string> cols;
  const int n = parameter_count(set, qubits);
  for (int k = 0; k < n; ++k) {
    cols.push_back("x" + std::to_string(k));
  }
  return cols;
}

std::vector<double> row_with_argmax(std::vector<double> head, const PowerResult& r) {
  head.insert(head.end(), r.argmax.begin(), r.argmax.end());
  return head;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

OptimizerConfig seeded(const ExperimentConfig& cfg) {
  OptimizerConfig o = cfg.optimizer;
  o.seed = cfg.seed;
  return o;
}

}  // namespace

std::vector<NamedTable> run_power(const ExperimentConfig& cfg) {
  const PowerResult r = maximize_power(PowerProblem{cfg.gate, cfg.channels, cfg.measure, cfg.input_set}, seeded(cfg));
  Table t(concat({"value"}, coordinate_columns(cfg.input_set, cfg.gate.qubits())));
  t.add_row(row_with_argmax({r.value}, r));
  return {{"power", std::move(t)}};
}

std::vector<NamedTable> run_noisy(const ExperimentConfig& cfg) {
  const OptimizerConfig opt = seeded(cfg);
  if (!cfg.sweep) {
    Table fixed(concat({"value"}, coordinate_columns(cfg.input_set, cfg.gate.qubits())));
    const PowerResult r = noisy_entangling_power(cfg.gate, cfg.channels, cfg.measure, cfg.input_set, opt);
    fixed.add_row(row_with_argmax({r.value}, r));
    return {{"noisy", std::move(fixed)}};
  }
  Table t(concat({"p", "value"}, coordinate_columns(cfg.input_set, cfg.gate.qubits())));
  for (double p : cfg.sweep->strengths) {
    std::vector<ChannelSpec> channels = cfg.channels;
    for (int target : cfg.sweep->targets) {
      channels.push_back({cfg.sweep->kind, p, target});
    }
    const PowerResult r = noisy_entangling_power(cfg.gate, channels, cfg.measure, cfg.input_set, opt);
    t.add_row(row_with_argmax({p, r.value}, r));
  }
  return {{"noisy", std::move(t)}};
}

std::vector<NamedTable> run_quench(const ExperimentConfig& cfg) {
  const PowerProblem problem{cfg.gate, cfg.channels, cfg.measure, cfg.input_set};
  QuenchConfig qc = cfg.quench;
  qc.seed = cfg.seed;
  Table t({"sigma", "e_avg", "stderr"});
  if (cfg.sigmas.empty()) {
    const QuenchResult q = quenched_average_power(problem, qc, seeded(cfg));
    double sigma = 0.0;
    for (double s : qc.sds) {
      sigma = std::max(sigma, s);
    }
    t.add_row({sigma, q.mean, q.stderr_mean});
    return {{"quench", std::move(t)}};
  }
  const std::size_t k = cfg.gate.params.size();
  const std::vector<double> mask = cfg.disordered.empty() ? std::vector<double>(k, 1.0) : cfg.disordered;
  for (double sigma : cfg.sigmas) {
    qc.sds.assign(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      qc.sds[j] = sigma * mask[j];
    }
    const QuenchResult q = quenched_average_power(problem, qc, seeded(cfg));
    t.add_row({sigma, q.mean, q.stderr_mean});
  }
  return {{"quench", std::move(t)}};
}

std::vector<NamedTable> run_survey(const ExperimentConfig& cfg) {
  SurveyConfig sc = cfg.survey;
  sc.seed = cfg.seed;
  sc.measure = cfg.measure;
  sc.input_set = cfg.input_set;
  sc.channels = cfg.channels;
  if (cfg.sweep) {
    throw ConfigError("noise.kind", "surveys take fixed noise.channels, not a sweep");
  }
  const SurveyResult s = haar_survey(sc, seeded(cfg));
  Table hist({"bin_lo", "bin_hi", "mass"});
  for (std::size_t b = 0; b < s.masses.size(); ++b) {
    hist.add_row({s.bin_edges[b], s.bin_edges[b + 1], s.masses[b]});
  }
  Table summary({"n", "mean", "sd"});
  summary.add_row({static_cast<double>(s.values.size()), s.mean, s.sd});
  std::vector<NamedTable> out{{"histogram", std::move(hist)}, {"summary", std::move(summary)}};
  if (sc.with_error) {
    Table errors({"power", "error"});
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      errors.add_row({s.values[i], s.errors[i]});
    }
    out.push_back({"errors", std::move(errors)});
  }
  return out;
}

std::vector<NamedTable> run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ExperimentKind::Power:
      return run_power(cfg);
    case ExperimentKind::Noisy:
      return run_noisy(cfg);
    case ExperimentKind::Quench:
      return run_quench(cfg);
    case ExperimentKind::Survey:
      return run_survey(cfg);
    case ExperimentKind::Reproduce:
      break;
  }
  throw ConfigError("experiment", "reproduce is run through the reproduce subcommand");
}

void write_outputs(const std::vector<NamedTable>& tables, const std::filesystem::path& out) {
  for (std::size_t k = 0; k < tables.size(); ++k) {
    if (out.empty()) {
      if (k > 0) {
        std::cout << '\n';
      }
      tables[k].table.write(std::cout);
      continue;
    }
    if (k == 0) {
      tables[k].table.write(out);
    } else {
      std::filesystem::path side = out;
      side.replace_filename(out.stem().string() + "_" + tables[k].name + ".csv");
      tables[k].table.write(side);
    }
  }
}

}  // namespace entpower::cli
