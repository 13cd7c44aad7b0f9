#include "entpower/power.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "entpower/optimizer.hpp"
#include "entpower/parallel.hpp"

namespace entpower {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  auto rng = stream_rng(seed ^ 0x5bd1e995ULL, index);
  return rng();
}

bool all_equal(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

// A product input known to be optimal for every parameter of a family.
std::optional<std::vector<double>> known_optimal_input(const PowerProblem& problem) {
  if (!has_parameter_independent_argmax(problem)) {
    return std::nullopt;
  }
  if (problem.gate.family == GateFamily::Diagonal) {
    return std::vector<double>{kPi / 4.0, 0.0, kPi / 4.0, 0.0};
  }
  return std::vector<double>{0.0, 0.0, kPi / 2.0, 0.0};
}

}  // namespace

std::string to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::GGM:
      return "ggm";
    case MeasureKind::Negativity:
      return "neg";
    case MeasureKind::MonogamyNegSq:
      return "monogamy";
  }
  return "unknown";
}

MeasureKind parse_measure_kind(const std::string& text) {
  if (text == "ggm") {
    return MeasureKind::GGM;
  }
  if (text == "neg" || text == "negativity") {
    return MeasureKind::Negativity;
  }
  if (text == "monogamy") {
    return MeasureKind::MonogamyNegSq;
  }
  throw InvalidArgument("unknown measure '" + text + "' (expected ggm, neg or monogamy)");
}

PowerObjective::PowerObjective(const PowerProblem& problem)
    : unitary_(problem.gate.matrix()),
      layout_(SubsystemLayout::for_dimension(unitary_.rows())),
      channels_(problem.channels),
      measure_(problem.measure),
      input_set_(problem.input_set) {
  if (measure_.kind == MeasureKind::GGM && !channels_.empty()) {
    throw InvalidArgument("GGM is defined for pure outputs; remove the channels or choose another measure");
  }
  if (measure_.kind == MeasureKind::MonogamyNegSq) {
    if (layout_.size() < 3) {
      throw InvalidArgument("monogamy score needs at least three qubits");
    }
    if (measure_.nodal < 0 || measure_.nodal >= layout_.size()) {
      throw InvalidArgument("monogamy nodal qubit out of range");
    }
  }
  if (measure_.kind == MeasureKind::Negativity) {
    if (!measure_.cut) {
      measure_.cut = Bipartition{{0}};
    }
    measure_.cut->validate(layout_);
  }
  for (const ChannelSpec& c : channels_) {
    if (c.target < 0 || c.target >= layout_.size()) {
      throw InvalidArgument("channel target " + std::to_string(c.target) + " out of range");
    }
  }
  parameter_count(input_set_, layout_.size());
}

int PowerObjective::dimension() const { return parameter_count(input_set_, layout_.size()); }

double PowerObjective::operator()(std::span<const double> x) const {
  const StateVector psi = input_state(input_set_, layout_.size(), x);
  if (measure_.kind == MeasureKind::GGM) {
    return ggm(unitary_ * psi, layout_);
  }
  DensityMatrix rho = psi * psi.adjoint();
  if (!channels_.empty()) {
    rho = apply_all(rho, channels_, layout_);
  }
  const DensityMatrix out = unitary_ * rho * unitary_.adjoint();
  if (measure_.kind == MeasureKind::Negativity) {
    return negativity(out, *measure_.cut, layout_);
  }
  return monogamy_score_neg_sq(out, measure_.nodal, layout_);
}

ProductParams PowerResult::product_argmax() const {
  if (input_set != InputSet::FullySeparable) {
    throw InvalidArgument("product_argmax: result is over the biseparable set");
  }
  return ProductParams::from_flat(argmax);
}

BisepParams PowerResult::bisep_argmax() const {
  if (input_set != InputSet::Biseparable12_3) {
    throw InvalidArgument("bisep_argmax: result is over the fully separable set");
  }
  return BisepParams::from_flat(argmax);
}

PowerResult maximize_power(const PowerProblem& problem, const OptimizerConfig& cfg,
                           const std::vector<std::vector<double>>& extra_starts) {
  if (cfg.restarts < 1) {
    throw InvalidArgument("optimizer restarts must be at least 1");
  }
  const PowerObjective objective(problem);
  const int n = objective.dimension();
  for (const auto& s : extra_starts) {
    if (static_cast<int>(s.size()) != n) {
      throw InvalidArgument("extra start has the wrong number of coordinates");
    }
  }
  NelderMeadOptions options;
  options.max_iters = cfg.max_iters;
  options.ftol = cfg.ftol;
  options.xtol = cfg.xtol;

  const Objective f = [&objective](std::span<const double> x) { return objective(x); };
  const std::size_t runs = static_cast<std::size_t>(cfg.restarts) + extra_starts.size();
  std::vector<NelderMeadResult> results(runs);
  parallel_for(runs, cfg.jobs, [&](std::size_t k) {
    std::vector<double> start;
    if (k < static_cast<std::size_t>(cfg.restarts)) {
      auto rng = stream_rng(cfg.seed, k);
      start = random_coordinates(problem.input_set, objective.qubits(), rng);
    } else {
      start = extra_starts[k - static_cast<std::size_t>(cfg.restarts)];
    }
    results[k] = nelder_mead_maximize(f, std::move(start), options);
  });

  PowerResult out;
  out.input_set = problem.input_set;
  out.measure = problem.measure;
  std::size_t best = 0;
  for (std::size_t k = 0; k < runs; ++k) {
    out.restart_values.push_back(results[k].value);
    out.iterations += results[k].iterations;
    out.evaluations += results[k].evaluations;
    if (results[k].value > results[best].value) {
      best = k;
    }
  }
  // The canonical coordinates name the same state; re-evaluating there would
  // only add rounding noise, and the raw best value keeps restarts monotone.
  out.argmax = canonical_coordinates(problem.input_set, results[best].x);
  out.value = results[best].value;
  return out;
}

PowerResult entangling_power(const GateSpec& gate, const MeasureSpec& measure, InputSet input_set,
                             const OptimizerConfig& cfg) {
  return maximize_power(PowerProblem{gate, {}, measure, input_set}, cfg);
}

PowerResult noisy_entangling_power(const GateSpec& gate, const std::vector<ChannelSpec>& channels,
                                   const MeasureSpec& measure, InputSet input_set, const OptimizerConfig& cfg) {
  if (measure.kind == MeasureKind::GGM) {
    throw InvalidArgument("GGM is defined for pure outputs; noisy power needs neg or monogamy");
  }
  return maximize_power(PowerProblem{gate, channels, measure, input_set}, cfg);
}

bool has_parameter_independent_argmax(const PowerProblem& problem) {
  if (!problem.channels.empty() || problem.input_set != InputSet::FullySeparable || problem.gate.qubits() != 2) {
    return false;
  }
  if (problem.measure.kind == MeasureKind::MonogamyNegSq) {
    return false;
  }
  const GateSpec& g = problem.gate;
  if (g.family == GateFamily::Diagonal) {
    return g.params.size() == 1;
  }
  if (g.family == GateFamily::CanonicalNL) {
    return g.params.size() == 3 && all_equal(g.params);
  }
  return false;
}

QuenchResult quenched_average_power(const PowerProblem& problem, const QuenchConfig& qc, const OptimizerConfig& cfg) {
  const std::size_t k = problem.gate.params.size();
  if (qc.means.size() != k || qc.sds.size() != k) {
    throw InvalidArgument("quench: means and sds need one entry per gate parameter (" + std::to_string(k) + ")");
  }
  if (std::any_of(qc.sds.begin(), qc.sds.end(), [](double s) { return !(s >= 0.0); })) {
    throw InvalidArgument("quench: standard deviations must be nonnegative");
  }
  if (qc.realizations < 1) {
    throw InvalidArgument("quench: realizations must be at least 1");
  }
  if (!qc.ties.empty()) {
    if (qc.ties.size() != k) {
      throw InvalidArgument("quench: ties needs one entry per gate parameter");
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (qc.ties[i] < 0 || static_cast<std::size_t>(qc.ties[i]) > i) {
        throw InvalidArgument("quench: ties[i] must lie in [0, i]");
      }
    }
  }

  const PowerProblem reference{problem.gate.with_params(qc.means), problem.channels, problem.measure,
                               problem.input_set};
  std::optional<std::vector<double>> fixed_input;
  // Independent draws of the three couplings would break the equal-J symmetry.
  const bool draws_stay_in_family =
      problem.gate.family != GateFamily::CanonicalNL ||
      std::all_of(qc.sds.begin(), qc.sds.end(), [](double s) { return s == 0.0; }) ||
      (!qc.ties.empty() && std::all_of(qc.ties.begin(), qc.ties.end(), [](int t) { return t == 0; }));
  if (qc.reuse_optimal_input && draws_stay_in_family && has_parameter_independent_argmax(reference)) {
    const PowerResult ref = maximize_power(reference, cfg);
    fixed_input = ref.value > 1e-9 ? ref.argmax : *known_optimal_input(reference);
  }

  const auto n = static_cast<std::size_t>(qc.realizations);
  std::vector<double> values(n);
  OptimizerConfig inner = cfg;
  inner.jobs = 1;
  parallel_for(n, cfg.jobs, [&](std::size_t i) {
    auto rng = stream_rng(qc.seed, i);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> z(k);
    std::vector<double> params(k);
    for (std::size_t j = 0; j < k; ++j) {
      z[j] = normal(rng);
    }
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t src = qc.ties.empty() ? j : static_cast<std::size_t>(qc.ties[j]);
      params[j] = src == j ? qc.means[j] + qc.sds[j] * z[j] : params[src];
    }
    const PowerProblem realized{problem.gate.with_params(params), problem.channels, problem.measure,
                                problem.input_set};
    if (fixed_input) {
      values[i] = PowerObjective(realized)(*fixed_input);
    } else {
      OptimizerConfig local = inner;
      local.seed = derive_seed(cfg.seed, i);
      values[i] = maximize_power(realized, local).value;
    }
  });

  QuenchResult out;
  out.reused_input = fixed_input.has_value();
  const double dn = static_cast<double>(n);
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / dn;
  if (n > 1) {
    double ss = 0.0;
    for (double v : values) {
      ss += (v - out.mean) * (v - out.mean);
    }
    out.sd = std::sqrt(ss / (dn - 1.0));
    out.stderr_mean = out.sd / std::sqrt(dn);
  }
  if (qc.keep_values) {
    out.values = std::move(values);
  }
  return out;
}

double power_error_delta(const GateSpec& gate, const std::vector<ChannelSpec>& channels, const MeasureSpec& measure,
                         InputSet input_set, const OptimizerConfig& cfg) {
  const PowerResult ideal = maximize_power(PowerProblem{gate, {}, measure, input_set}, cfg);
  const PowerProblem noisy_problem{gate, channels, measure, input_set};
  // Starting one run at the noiseless optimum keeps the difference nonnegative.
  const PowerResult noisy = maximize_power(noisy_problem, cfg, {ideal.argmax});
  const double at_ideal_input = PowerObjective(noisy_problem)(ideal.argmax);
  return noisy.value - at_ideal_input;
}

GateSpec survey_gate(const SurveyConfig& sc, int index) {
  auto rng = stream_rng(sc.seed, static_cast<std::uint64_t>(index));
  if (sc.ensemble == SurveyEnsemble::Haar) {
    return GateSpec::haar(sc.dim, rng());
  }
  std::uniform_real_distribution<double> coupling(0.0, kPi / 2.0);
  const double j1 = coupling(rng);
  const double j2 = coupling(rng);
  const double j3 = coupling(rng);
  return GateSpec::canonical(j1, j2, j3);
}

SurveyResult haar_survey(const SurveyConfig& sc, const OptimizerConfig& cfg) {
  if (sc.n_gates < 1) {
    throw InvalidArgument("survey: n_gates must be at least 1");
  }
  if (sc.bins < 1 || !(sc.range_max > 0.0)) {
    throw InvalidArgument("survey: need at least one bin over a positive range");
  }
  const auto n = static_cast<std::size_t>(sc.n_gates);
  std::vector<double> values(n);
  std::vector<double> errors(sc.with_error ? n : 0);
  OptimizerConfig inner = cfg;
  inner.jobs = 1;
  parallel_for(n, cfg.jobs, [&](std::size_t i) {
    const GateSpec gate = survey_gate(sc, static_cast<int>(i));
    OptimizerConfig local = inner;
    local.seed = derive_seed(cfg.seed, i);
    const PowerProblem problem{gate, sc.channels, sc.measure, sc.input_set};
    if (sc.with_error) {
      const PowerResult ideal = maximize_power(PowerProblem{gate, {}, sc.measure, sc.input_set}, local);
      const PowerResult noisy = maximize_power(problem, local, {ideal.argmax});
      values[i] = noisy.value;
      errors[i] = noisy.value - PowerObjective(problem)(ideal.argmax);
    } else {
      values[i] = maximize_power(problem, local).value;
    }
  });

  SurveyResult out;
  const double width = sc.range_max / sc.bins;
  for (int b = 0; b <= sc.bins; ++b) {
    out.bin_edges.push_back(width * b);
  }
  out.masses.assign(static_cast<std::size_t>(sc.bins), 0.0);
  const double dn = static_cast<double>(n);
  for (double v : values) {
    const int b = std::clamp(static_cast<int>(std::floor(v / width)), 0, sc.bins - 1);
    out.masses[static_cast<std::size_t>(b)] += 1.0 / dn;
  }
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / dn;
  if (n > 1) {
    double ss = 0.0;
    for (double v : values) {
      ss += (v - out.mean) * (v - out.mean);
    }
    out.sd = std::sqrt(ss / (dn - 1.0));
  }
  out.values = std::move(values);
  out.errors = std::move(errors);
  return out;
}

}  // namespace entpower
