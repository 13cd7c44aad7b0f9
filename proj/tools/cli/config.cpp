#include "cli/config.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace entpower::cli {

namespace {

using boost::property_tree::ptree;

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"gate", {"family", "params", "dim", "seed", "matrix", "fixture"}},
      {"measure", {"kind", "nodal", "cut"}},
      {"input", {"set"}},
      {"noise", {"channels", "kind", "targets", "p"}},
      {"optimizer", {"restarts", "max_iters", "ftol", "xtol", "jobs"}},
      {"quench", {"means", "sds", "sigmas", "disordered", "ties", "realizations", "reuse_optimal_input"}},
      {"survey", {"n_gates", "ensemble", "dim", "bins", "range_max", "with_error"}},
  };
  return keys;
}

double to_double(const std::string& field, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) {
      throw std::invalid_argument("trailing text");
    }
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field, "expected a number, got '" + text + "'");
  }
}

long long to_integer(const std::string& field, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) {
      throw std::invalid_argument("trailing text");
    }
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field, "expected an integer, got '" + text + "'");
  }
}

bool to_bool(const std::string& field, const std::string& text) {
  const std::string t = boost::to_lower_copy(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") {
    return true;
  }
  if (t == "false" || t == "0" || t == "no" || t == "off") {
    return false;
  }
  throw ConfigError(field, "expected true or false, got '" + text + "'");
}

std::vector<int> int_list(const std::string& field, const std::string& text) {
  std::vector<int> out;
  for (double v : parse_list(field, text)) {
    if (v != static_cast<int>(v)) {
      throw ConfigError(field, "expected integers");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

// Wraps library errors so the message names the key that caused them.
template <typename Fn>
auto field_guard(const std::string& field, Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidArgument& e) {
    throw ConfigError(field, e.what());
  }
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Power:
      return "power";
    case ExperimentKind::Quench:
      return "quench";
    case ExperimentKind::Noisy:
      return "noisy";
    case ExperimentKind::Survey:
      return "survey";
    case ExperimentKind::Reproduce:
      return "reproduce";
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(const std::string& text) {
  for (ExperimentKind k : {ExperimentKind::Power, ExperimentKind::Quench, ExperimentKind::Noisy,
                           ExperimentKind::Survey, ExperimentKind::Reproduce}) {
    if (to_string(k) == text) {
      return k;
    }
  }
  throw ConfigError("experiment", "unknown kind '" + text + "' (expected power, quench, noisy, survey or reproduce)");
}

std::vector<double> parse_list(const std::string& field, const std::string& text) {
  std::vector<std::string> parts;
  boost::split(parts, text, boost::is_any_of(","));
  std::vector<double> out;
  for (auto& part : parts) {
    boost::trim(part);
    if (part.empty()) {
      if (parts.size() == 1) {
        break;
      }
      throw ConfigError(field, "empty list entry");
    }
    out.push_back(to_double(field, part));
  }
  return out;
}

ExperimentConfig parse_config(std::istream& in) {
  ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("config", std::string("malformed INI: ") + e.message() + " (line " + std::to_string(e.line()) +
                                    ")");
  }

  ExperimentConfig cfg;
  bool have_experiment = false;
  for (const auto& [key, node] : tree) {
    const auto section = allowed_keys().find(key);
    if (section != allowed_keys().end() || !node.empty()) {
      if (section == allowed_keys().end()) {
        throw ConfigError(key, "unknown section");
      }
      for (const auto& [sub, leaf] : node) {
        if (!section->second.contains(sub)) {
          throw ConfigError(key + "." + sub, "unknown key");
        }
      }
      continue;
    }
    const std::string value = node.data();
    if (key == "experiment") {
      cfg.kind = parse_experiment_kind(value);
      have_experiment = true;
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(to_integer("seed", value));
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "figure") {
      cfg.figure = value;
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  if (!have_experiment) {
    throw ConfigError("experiment", "missing required key 'experiment'");
  }

  const auto get = [&tree](const std::string& path) -> std::optional<std::string> {
    if (auto v = tree.get_optional<std::string>(ptree::path_type(path, '.'))) {
      return boost::trim_copy(*v);
    }
    return std::nullopt;
  };

  // [gate]
  if (auto family = get("gate.family")) {
    const GateFamily f = field_guard("gate.family", [&] { return parse_gate_family(*family); });
    cfg.gate.family = f;
    if (f == GateFamily::CanonicalNL) {
      cfg.gate.dim = 4;
    }
  }
  if (auto dim = get("gate.dim")) {
    cfg.gate.dim = static_cast<Eigen::Index>(to_integer("gate.dim", *dim));
  }
  if (auto params = get("gate.params")) {
    cfg.gate.params = parse_list("gate.params", *params);
  }
  if (auto seed = get("gate.seed")) {
    cfg.gate.seed = static_cast<std::uint64_t>(to_integer("gate.seed", *seed));
  }
  if (auto matrix = get("gate.matrix")) {
    cfg.gate = field_guard("gate.matrix", [&] { return GateSpec::from_matrix(read_matrix_file(*matrix)); });
  }
  if (auto fixture = get("gate.fixture")) {
    cfg.gate = field_guard("gate.fixture", [&] {
      return GateSpec::from_matrix(fixture_haar(static_cast<int>(to_integer("gate.fixture", *fixture))));
    });
  }

  // [measure]
  if (auto kind = get("measure.kind")) {
    cfg.measure.kind = field_guard("measure.kind", [&] { return parse_measure_kind(*kind); });
  }
  if (auto nodal = get("measure.nodal")) {
    cfg.measure.nodal = static_cast<int>(to_integer("measure.nodal", *nodal));
  }
  if (auto cut = get("measure.cut")) {
    Bipartition b;
    for (int k : int_list("measure.cut", *cut)) {
      b.side_a.insert(k);
    }
    cfg.measure.cut = b;
  }

  // [input]
  if (auto set = get("input.set")) {
    cfg.input_set = field_guard("input.set", [&] { return parse_input_set(*set); });
  }

  // [noise]
  if (auto channels = get("noise.channels")) {
    std::vector<std::string> parts;
    boost::split(parts, *channels, boost::is_any_of(","));
    for (auto& part : parts) {
      boost::trim(part);
      if (!part.empty()) {
        cfg.channels.push_back(field_guard("noise.channels", [&] { return ChannelSpec::parse(part); }));
      }
    }
  }
  if (auto kind = get("noise.kind")) {
    NoiseSweep sweep;
    sweep.kind = field_guard("noise.kind", [&] { return parse_channel_kind(*kind); });
    const auto targets = get("noise.targets");
    const auto strengths = get("noise.p");
    if (!targets) {
      throw ConfigError("noise.targets", "required when noise.kind is set");
    }
    if (!strengths) {
      throw ConfigError("noise.p", "required when noise.kind is set");
    }
    sweep.targets = int_list("noise.targets", *targets);
    sweep.strengths = parse_list("noise.p", *strengths);
    for (double p : sweep.strengths) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("noise.p", "strengths must lie in [0, 1]");
      }
    }
    cfg.sweep = sweep;
  } else if (get("noise.targets") || get("noise.p")) {
    throw ConfigError("noise.kind", "required when noise.targets or noise.p is set");
  }

  // [optimizer]
  if (auto v = get("optimizer.restarts")) {
    cfg.optimizer.restarts = static_cast<int>(to_integer("optimizer.restarts", *v));
  }
  if (auto v = get("optimizer.max_iters")) {
    cfg.optimizer.max_iters = static_cast<int>(to_integer("optimizer.max_iters", *v));
  }
  if (auto v = get("optimizer.ftol")) {
    cfg.optimizer.ftol = to_double("optimizer.ftol", *v);
  }
  if (auto v = get("optimizer.xtol")) {
    cfg.optimizer.xtol = to_double("optimizer.xtol", *v);
  }
  if (auto v = get("optimizer.jobs")) {
    cfg.optimizer.jobs = static_cast<int>(to_integer("optimizer.jobs", *v));
  }

  // [quench]
  cfg.quench.means = cfg.gate.params;
  if (auto v = get("quench.means")) {
    cfg.quench.means = parse_list("quench.means", *v);
  }
  if (auto v = get("quench.sds")) {
    cfg.quench.sds = parse_list("quench.sds", *v);
  }
  if (auto v = get("quench.sigmas")) {
    cfg.sigmas = parse_list("quench.sigmas", *v);
  }
  if (auto v = get("quench.disordered")) {
    cfg.disordered = parse_list("quench.disordered", *v);
  }
  if (auto v = get("quench.ties")) {
    cfg.quench.ties = int_list("quench.ties", *v);
  }
  if (auto v = get("quench.realizations")) {
    cfg.quench.realizations = static_cast<int>(to_integer("quench.realizations", *v));
  }
  if (auto v = get("quench.reuse_optimal_input")) {
    cfg.quench.reuse_optimal_input = to_bool("quench.reuse_optimal_input", *v);
  }

  // [survey]
  if (auto v = get("survey.n_gates")) {
    cfg.survey.n_gates = static_cast<int>(to_integer("survey.n_gates", *v));
  }
  if (auto v = get("survey.ensemble")) {
    if (*v == "canonical") {
      cfg.survey.ensemble = SurveyEnsemble::CanonicalUniform;
    } else if (*v == "haar") {
      cfg.survey.ensemble = SurveyEnsemble::Haar;
    } else {
      throw ConfigError("survey.ensemble", "expected canonical or haar, got '" + *v + "'");
    }
  }
  if (auto v = get("survey.dim")) {
    cfg.survey.dim = static_cast<Eigen::Index>(to_integer("survey.dim", *v));
  }
  if (auto v = get("survey.bins")) {
    cfg.survey.bins = static_cast<int>(to_integer("survey.bins", *v));
  }
  if (auto v = get("survey.range_max")) {
    cfg.survey.range_max = to_double("survey.range_max", *v);
  }
  if (auto v = get("survey.with_error")) {
    cfg.survey.with_error = to_bool("survey.with_error", *v);
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config", "cannot open '" + path.string() + "'");
  }
  return parse_config(in);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.optimizer.restarts < 1) {
    throw ConfigError("optimizer.restarts", "must be at least 1");
  }
  if (cfg.optimizer.max_iters < 1) {
    throw ConfigError("optimizer.max_iters", "must be at least 1");
  }
  if (cfg.optimizer.jobs < 1) {
    throw ConfigError("optimizer.jobs", "must be at least 1");
  }
  const bool noisy = !cfg.channels.empty() || cfg.sweep.has_value();
  if (cfg.measure.kind == MeasureKind::GGM && noisy) {
    throw ConfigError("measure.kind", "ggm is defined for pure outputs only; use neg or monogamy with noise");
  }
  if (cfg.kind == ExperimentKind::Reproduce) {
    if (cfg.figure.empty()) {
      throw ConfigError("figure", "reproduce needs a figure id");
    }
    return;
  }
  if (cfg.kind == ExperimentKind::Survey) {
    if (cfg.survey.n_gates < 1) {
      throw ConfigError("survey.n_gates", "must be at least 1");
    }
    if (cfg.survey.bins < 1) {
      throw ConfigError("survey.bins", "must be at least 1");
    }
    return;
  }
  if (cfg.kind == ExperimentKind::Noisy && !noisy) {
    throw ConfigError("noise", "noisy experiments need noise.channels or a noise.kind sweep");
  }

  // Building the objective once checks dimensions, measure and input set together.
  const int qubits = field_guard("gate", [&] { return SubsystemLayout::for_dimension(cfg.gate.matrix().rows()).size(); });
  field_guard("measure", [&] {
    PowerObjective objective(PowerProblem{cfg.gate, cfg.channels, cfg.measure, cfg.input_set});
    return objective.dimension();
  });
  if (cfg.sweep) {
    for (int t : cfg.sweep->targets) {
      if (t < 0 || t >= qubits) {
        throw ConfigError("noise.targets", "target " + std::to_string(t) + " out of range");
      }
    }
  }
  if (cfg.kind == ExperimentKind::Quench) {
    const std::size_t k = cfg.gate.params.size();
    if (k == 0) {
      throw ConfigError("gate.params", "quench needs a parameterized gate family");
    }
    if (cfg.quench.means.size() != k) {
      throw ConfigError("quench.means", "needs " + std::to_string(k) + " entries");
    }
    if (cfg.sigmas.empty() && cfg.quench.sds.size() != k) {
      throw ConfigError("quench.sds", "needs " + std::to_string(k) + " entries (or give quench.sigmas)");
    }
    if (!cfg.disordered.empty() && cfg.disordered.size() != k) {
      throw ConfigError("quench.disordered", "needs " + std::to_string(k) + " entries");
    }
    for (double s : cfg.sigmas) {
      if (s < 0.0) {
        throw ConfigError("quench.sigmas", "must be nonnegative");
      }
    }
    if (cfg.quench.realizations < 1) {
      throw ConfigError("quench.realizations", "must be at least 1");
    }
  }
}

}  // namespace entpower::cli
