#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entpower/channels.hpp"
#include "entpower/gates.hpp"
#include "entpower/measures.hpp"
#include "entpower/states.hpp"
#include "entpower/types.hpp"

namespace entpower {

enum class MeasureKind { GGM, Negativity, MonogamyNegSq };

std::string to_string(MeasureKind kind);
/// Accepts "ggm", "neg", "monogamy".
MeasureKind parse_measure_kind(const std::string& text);

/// Entanglement quantifier applied to the gate output.
struct MeasureSpec {
  MeasureKind kind = MeasureKind::GGM;
  /// Nodal party of the monogamy score.
  int nodal = 1;
  /// Cut used by Negativity; defaults to {0} : rest.
  std::optional<Bipartition> cut;

  static MeasureSpec ggm() { return {MeasureKind::GGM, 1, std::nullopt}; }
  static MeasureSpec negativity() { return {MeasureKind::Negativity, 1, std::nullopt}; }
  static MeasureSpec monogamy(int nodal = 1) { return {MeasureKind::MonogamyNegSq, nodal, std::nullopt}; }
};

struct OptimizerConfig {
  int restarts = 50;
  int max_iters = 2000;
  double ftol = 1e-9;
  double xtol = 1e-7;
  std::uint64_t seed = 0;
  /// Worker threads for the restarts. Results do not depend on it.
  int jobs = 1;
};

/// A gate, the noise applied to its input, the measure and the input manifold.
struct PowerProblem {
  GateSpec gate;
  std::vector<ChannelSpec> channels;
  MeasureSpec measure;
  InputSet input_set = InputSet::FullySeparable;
};

/// Entanglement of U Lambda(|psi(x)><psi(x)|) U^dagger for a fixed problem.
class PowerObjective {
public:
  explicit PowerObjective(const PowerProblem& problem);

  double operator()(std::span<const double> x) const;
  int dimension() const;
  int qubits() const { return layout_.size(); }

private:
  ComplexMatrix unitary_;
  SubsystemLayout layout_;
  std::vector<ChannelSpec> channels_;
  MeasureSpec measure_;
  InputSet input_set_;
};

struct PowerResult {
  double value = 0.0;
  /// Canonical coordinates of the maximizing input.
  std::vector<double> argmax;
  InputSet input_set = InputSet::FullySeparable;
  MeasureSpec measure;
  /// Best value reached by each restart, in restart order.
  std::vector<double> restart_values;
  int iterations = 0;
  int evaluations = 0;

  ProductParams product_argmax() const;
  BisepParams bisep_argmax() const;
};

/// Multistart maximization of the problem's objective. Restart k starts from a
/// point drawn with stream_rng(cfg.seed, k); `extra_starts` are tried after them.
PowerResult maximize_power(const PowerProblem& problem, const OptimizerConfig& cfg,
                           const std::vector<std::vector<double>>& extra_starts = {});

PowerResult entangling_power(const GateSpec& gate, const MeasureSpec& measure, InputSet input_set,
                             const OptimizerConfig& cfg);

/// Throws InvalidArgument for GGM, which is defined for pure outputs only.
PowerResult noisy_entangling_power(const GateSpec& gate, const std::vector<ChannelSpec>& channels,
                                   const MeasureSpec& measure, InputSet input_set, const OptimizerConfig& cfg);

struct QuenchConfig {
  /// One entry per gate parameter.
  std::vector<double> means;
  std::vector<double> sds;
  /// Optional: ties[i] = j makes parameter i reuse the draw of parameter j (j <= i).
  std::vector<int> ties;
  int realizations = 10000;
  std::uint64_t seed = 0;
  /// Optimize once and re-evaluate per realization, when the family has an
  /// input that is optimal for every parameter value.
  bool reuse_optimal_input = false;
  bool keep_values = false;
};

struct QuenchResult {
  double mean = 0.0;
  double stderr_mean = 0.0;
  double sd = 0.0;
  std::vector<double> values;
  bool reused_input = false;
};

/// Average power over Gaussian draws of the gate parameters. Draw i uses
/// stream_rng(qc.seed, i), and each parameter is mean + sd * z with the same
/// standard normal z across different sds (common random numbers).
QuenchResult quenched_average_power(const PowerProblem& problem, const QuenchConfig& qc, const OptimizerConfig& cfg);

/// True when the problem's family has a parameter-independent optimal input that
/// reuse_optimal_input may rely on.
bool has_parameter_independent_argmax(const PowerProblem& problem);

/// Noisy power minus the noisy measure at the noiseless-optimal input.
double power_error_delta(const GateSpec& gate, const std::vector<ChannelSpec>& channels, const MeasureSpec& measure,
                         InputSet input_set, const OptimizerConfig& cfg);

enum class SurveyEnsemble { CanonicalUniform, Haar };

struct SurveyConfig {
  int n_gates = 10000;
  SurveyEnsemble ensemble = SurveyEnsemble::CanonicalUniform;
  /// Gate dimension for the Haar ensemble.
  Eigen::Index dim = 4;
  std::vector<ChannelSpec> channels;
  MeasureSpec measure = MeasureSpec::negativity();
  InputSet input_set = InputSet::FullySeparable;
  int bins = 25;
  double range_max = 0.5;
  std::uint64_t seed = 0;
  bool with_error = false;
};

struct SurveyResult {
  std::vector<double> bin_edges;
  std::vector<double> masses;
  double mean = 0.0;
  double sd = 0.0;
  std::vector<double> values;
  /// power_error_delta per gate, filled when with_error is set.
  std::vector<double> errors;
};

/// Gate i of the survey; its couplings (or Haar seed) come from stream_rng(seed, i).
GateSpec survey_gate(const SurveyConfig& sc, int index);

/// Power distribution over random gates. Values outside [0, range_max] fall into the end bins.
SurveyResult haar_survey(const SurveyConfig& sc, const OptimizerConfig& cfg);

}  // namespace entpower
