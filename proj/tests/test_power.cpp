#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "entpower/oracles.hpp"
#include "entpower/power.hpp"

using namespace entpower;

namespace {

constexpr double kPi = std::numbers::pi;

OptimizerConfig quick(int restarts = 12, std::uint64_t seed = 1) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

// Distance between polar angles, treating theta and pi - theta as the same
// point (they differ only by a phase on |1> and a global sign).
double theta_distance(double a, double b) { return std::min(std::abs(a - b), std::abs(kPi - a - b)); }

}  // namespace

TEST_CASE("measure names") {
  CHECK(parse_measure_kind("ggm") == MeasureKind::GGM);
  CHECK(parse_measure_kind("neg") == MeasureKind::Negativity);
  CHECK(parse_measure_kind("monogamy") == MeasureKind::MonogamyNegSq);
  CHECK(to_string(MeasureKind::MonogamyNegSq) == "monogamy");
  CHECK_THROWS_AS(parse_measure_kind("concurrence"), InvalidArgument);
}

TEST_CASE("identity gate has zero power for every measure") {
  const GateSpec id2 = GateSpec::diagonal({}, 4);
  const GateSpec id3 = GateSpec::diagonal({}, 8);
  CHECK(entangling_power(id2, MeasureSpec::ggm(), InputSet::FullySeparable, quick(4)).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(entangling_power(id2, MeasureSpec::negativity(), InputSet::FullySeparable, quick(4)).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(entangling_power(id3, MeasureSpec::monogamy(), InputSet::FullySeparable, quick(4)).value ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("maximally entangling diagonal gate") {
  const PowerResult r = entangling_power(GateSpec::diagonal({kPi}, 4), MeasureSpec::ggm(), InputSet::FullySeparable,
                                         quick());
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-9));
  const ProductParams p = r.product_argmax();
  CHECK(theta_distance(p.thetas[0], kPi / 4) < 1e-4);
  CHECK(theta_distance(p.thetas[1], kPi / 4) < 1e-4);
  CHECK_THROWS_AS(r.bisep_argmax(), InvalidArgument);
}

TEST_CASE("equal-J canonical gate at J = pi/8") {
  const PowerResult r =
      entangling_power(GateSpec::canonical(kPi / 8, kPi / 8, kPi / 8), MeasureSpec::ggm(), InputSet::FullySeparable,
                       quick());
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-9));
  // Any pair of orthogonal single-qubit states is optimal; |01> is one of them.
  const ProductParams p = r.product_argmax();
  const auto a = qubit_state(p.thetas[0], p.xis[0]);
  const auto b = qubit_state(p.thetas[1], p.xis[1]);
  CHECK(std::abs(a.dot(b)) < 1e-3);
}

TEST_CASE("result value equals the objective at the reported argmax") {
  for (const GateSpec& g : {GateSpec::diagonal({0.9, 1.7}, 4), GateSpec::canonical(0.7, 0.3, 0.1),
                            GateSpec::haar(4, 5)}) {
    for (const MeasureSpec& m : {MeasureSpec::ggm(), MeasureSpec::negativity()}) {
      const PowerProblem problem{g, {}, m, InputSet::FullySeparable};
      const PowerResult r = maximize_power(problem, quick(6));
      CHECK(std::abs(r.value - PowerObjective(problem)(r.argmax)) < 1e-9);
      CHECK(r.restart_values.size() == 6);
      CHECK(r.evaluations > 0);
      // No random input beats the optimum.
      std::mt19937_64 rng(4);
      for (int t = 0; t < 200; ++t) {
        const auto x = random_coordinates(InputSet::FullySeparable, 2, rng);
        CHECK(PowerObjective(problem)(x) <= r.value + 1e-9);
      }
    }
  }
}

TEST_CASE("restart sequence is monotone for a fixed seed") {
  const GateSpec g = GateSpec::haar(8, 3);
  double previous = -1.0;
  for (int restarts : {1, 2, 4, 8}) {
    const double v = entangling_power(g, MeasureSpec::ggm(), InputSet::FullySeparable, quick(restarts, 9)).value;
    CHECK(v >= previous);
    previous = v;
  }
}

TEST_CASE("worker count does not change results") {
  const GateSpec g = GateSpec::canonical(0.9, 0.4, 0.2);
  const std::vector<ChannelSpec> noise{{ChannelKind::AmplitudeDamping, 0.3, 0}};
  OptimizerConfig one = quick(16, 3);
  OptimizerConfig many = one;
  many.jobs = 8;
  const PowerResult a = noisy_entangling_power(g, noise, MeasureSpec::negativity(), InputSet::FullySeparable, one);
  const PowerResult b = noisy_entangling_power(g, noise, MeasureSpec::negativity(), InputSet::FullySeparable, many);
  CHECK(a.value == b.value);
  CHECK(a.argmax == b.argmax);
  CHECK(a.restart_values == b.restart_values);
}

TEST_CASE("noisy power: p = 0 recovers the ideal power, GGM is rejected") {
  const GateSpec g = GateSpec::diagonal({0.4, 2.2}, 4);
  const double ideal = entangling_power(g, MeasureSpec::negativity(), InputSet::FullySeparable, quick()).value;
  for (ChannelKind kind : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping, ChannelKind::Depolarizing}) {
    const double noisy = noisy_entangling_power(g, on_all_qubits(kind, 0.0, 2), MeasureSpec::negativity(),
                                                InputSet::FullySeparable, quick())
                             .value;
    CHECK(std::abs(noisy - ideal) < 2e-9);
  }
  CHECK_THROWS_AS(noisy_entangling_power(g, on_all_qubits(ChannelKind::PhaseDamping, 0.2, 2), MeasureSpec::ggm(),
                                         InputSet::FullySeparable, quick()),
                  InvalidArgument);
  CHECK_THROWS_AS(maximize_power(PowerProblem{g, {{ChannelKind::PhaseDamping, 0.2, 0}}, MeasureSpec::ggm(),
                                              InputSet::FullySeparable},
                                 quick()),
                  InvalidArgument);
  CHECK_THROWS_AS(maximize_power(PowerProblem{g, {{ChannelKind::PhaseDamping, 0.2, 2}}, MeasureSpec::negativity(),
                                              InputSet::FullySeparable},
                                 quick()),
                  InvalidArgument);
  OptimizerConfig none = quick();
  none.restarts = 0;
  CHECK_THROWS_AS(entangling_power(g, MeasureSpec::ggm(), InputSet::FullySeparable, none), InvalidArgument);
}

TEST_CASE("noisy power never exceeds the noiseless power") {
  for (const GateSpec& g : {GateSpec::diagonal({kPi / 2, kPi / 6}, 4), GateSpec::canonical(0.8, 0.5, 0.1)}) {
    const double ideal = entangling_power(g, MeasureSpec::negativity(), InputSet::FullySeparable, quick()).value;
    for (ChannelKind kind : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping, ChannelKind::Depolarizing}) {
      for (double p : {0.2, 0.6}) {
        const double noisy = noisy_entangling_power(g, on_all_qubits(kind, p, 2), MeasureSpec::negativity(),
                                                    InputSet::FullySeparable, quick())
                                 .value;
        CHECK(noisy <= ideal + 1e-9);
      }
    }
  }
}

TEST_CASE("amplitude damping shifts the optimal input of a weak diagonal gate") {
  const PowerResult r = noisy_entangling_power(GateSpec::diagonal({kPi / 4}, 4),
                                               {{ChannelKind::AmplitudeDamping, 0.4, 0}}, MeasureSpec::negativity(),
                                               InputSet::FullySeparable, quick(20));
  const ProductParams p = r.product_argmax();
  CHECK(theta_distance(p.thetas[0], 0.69) < 0.01);
  CHECK(theta_distance(p.thetas[1], 3 * kPi / 4) < 0.01);
}

TEST_CASE("three-qubit measures and biseparable inputs") {
  const GateSpec g = GateSpec::diagonal({kPi}, 8);
  const PowerResult bs = entangling_power(g, MeasureSpec::ggm(), InputSet::Biseparable12_3, quick(16));
  CHECK(bs.value == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(bs.bisep_argmax().flatten().size() == 7);
  CHECK_THROWS_AS(entangling_power(GateSpec::diagonal({kPi}, 4), MeasureSpec::monogamy(), InputSet::FullySeparable,
                                   quick()),
                  InvalidArgument);
  CHECK_THROWS_AS(entangling_power(g, MeasureSpec::monogamy(5), InputSet::FullySeparable, quick()), InvalidArgument);
  MeasureSpec cut = MeasureSpec::negativity();
  cut.cut = Bipartition{{0, 1}};
  CHECK(entangling_power(g, cut, InputSet::FullySeparable, quick(8)).value > 0.1);
}

TEST_CASE("quench with zero disorder equals the ideal power") {
  const PowerProblem problem{GateSpec::diagonal({1.3}, 4), {}, MeasureSpec::ggm(), InputSet::FullySeparable};
  QuenchConfig qc;
  qc.means = {1.3};
  qc.sds = {0.0};
  qc.realizations = 20;
  const QuenchResult q = quenched_average_power(problem, qc, quick(6));
  CHECK(q.mean == doctest::Approx(oracles::ggm_diag1(1.3)).epsilon(1e-9));
  CHECK(q.stderr_mean < 1e-9);
}

TEST_CASE("quench input reuse agrees with per-realization optimization") {
  const PowerProblem problem{GateSpec::diagonal({kPi / 10}, 4), {}, MeasureSpec::ggm(), InputSet::FullySeparable};
  QuenchConfig qc;
  qc.means = {kPi / 10};
  qc.sds = {0.8};
  qc.realizations = 60;
  qc.keep_values = true;
  const QuenchResult full = quenched_average_power(problem, qc, quick(6));
  qc.reuse_optimal_input = true;
  const QuenchResult reused = quenched_average_power(problem, qc, quick(6));
  CHECK_FALSE(full.reused_input);
  CHECK(reused.reused_input);
  REQUIRE(full.values.size() == reused.values.size());
  for (std::size_t i = 0; i < full.values.size(); ++i) {
    CHECK(reused.values[i] == doctest::Approx(full.values[i]).epsilon(1e-7));
  }
  CHECK(full.stderr_mean == doctest::Approx(full.sd / std::sqrt(60.0)));
}

TEST_CASE("input reuse is refused where the optimum depends on the parameters") {
  CHECK(has_parameter_independent_argmax({GateSpec::diagonal({1.0}, 4), {}, MeasureSpec::ggm(), InputSet::FullySeparable}));
  CHECK(has_parameter_independent_argmax(
      {GateSpec::canonical(0.2, 0.2, 0.2), {}, MeasureSpec::negativity(), InputSet::FullySeparable}));
  CHECK_FALSE(has_parameter_independent_argmax(
      {GateSpec::diagonal({1.0, 2.0}, 4), {}, MeasureSpec::ggm(), InputSet::FullySeparable}));
  CHECK_FALSE(has_parameter_independent_argmax(
      {GateSpec::canonical(0.7, 0.2, 0.2), {}, MeasureSpec::ggm(), InputSet::FullySeparable}));
  CHECK_FALSE(has_parameter_independent_argmax(
      {GateSpec::diagonal({1.0}, 8), {}, MeasureSpec::ggm(), InputSet::FullySeparable}));
  CHECK_FALSE(has_parameter_independent_argmax({GateSpec::diagonal({1.0}, 4),
                                                {{ChannelKind::Depolarizing, 0.1, 0}},
                                                MeasureSpec::negativity(),
                                                InputSet::FullySeparable}));

  // Untied couplings drawn independently leave the equal-J family.
  const PowerProblem problem{GateSpec::canonical(0.3, 0.3, 0.3), {}, MeasureSpec::ggm(), InputSet::FullySeparable};
  QuenchConfig qc;
  qc.means = {0.3, 0.3, 0.3};
  qc.sds = {0.1, 0.1, 0.1};
  qc.realizations = 4;
  qc.reuse_optimal_input = true;
  CHECK_FALSE(quenched_average_power(problem, qc, quick(4)).reused_input);
  qc.ties = {0, 0, 0};
  CHECK(quenched_average_power(problem, qc, quick(4)).reused_input);
}

TEST_CASE("quench ties copy draws and validate their indices") {
  const PowerProblem problem{GateSpec::canonical(0.7, 0.2, 0.2), {}, MeasureSpec::ggm(), InputSet::FullySeparable};
  QuenchConfig qc;
  qc.means = {0.7, 0.2, 0.2};
  qc.sds = {0.0, 0.3, 0.3};
  qc.ties = {0, 1, 1};
  qc.realizations = 8;
  CHECK_NOTHROW(quenched_average_power(problem, qc, quick(3)));
  qc.ties = {0, 2, 2};
  CHECK_THROWS_AS(quenched_average_power(problem, qc, quick(3)), InvalidArgument);
  qc.ties = {};
  qc.sds = {0.0, -0.1, 0.0};
  CHECK_THROWS_AS(quenched_average_power(problem, qc, quick(3)), InvalidArgument);
  qc.sds = {0.0, 0.1};
  CHECK_THROWS_AS(quenched_average_power(problem, qc, quick(3)), InvalidArgument);
}

TEST_CASE("quench results do not depend on the worker count") {
  const PowerProblem problem{GateSpec::diagonal({0.5, 1.0}, 4), {}, MeasureSpec::negativity(),
                             InputSet::FullySeparable};
  QuenchConfig qc;
  qc.means = {0.5, 1.0};
  qc.sds = {0.3, 0.6};
  qc.realizations = 24;
  qc.keep_values = true;
  OptimizerConfig one = quick(4);
  OptimizerConfig many = one;
  many.jobs = 8;
  const QuenchResult a = quenched_average_power(problem, qc, one);
  const QuenchResult b = quenched_average_power(problem, qc, many);
  CHECK(a.values == b.values);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_mean == b.stderr_mean);
}

TEST_CASE("error metric is zero without noise and nonnegative with it") {
  const GateSpec g = GateSpec::canonical(0.9, 0.5, 0.2);
  CHECK(std::abs(power_error_delta(g, on_all_qubits(ChannelKind::Depolarizing, 0.0, 2), MeasureSpec::negativity(),
                                   InputSet::FullySeparable, quick(8))) < 1e-9);
  for (double p : {0.2, 0.8}) {
    CHECK(power_error_delta(g, {{ChannelKind::AmplitudeDamping, p, 0}}, MeasureSpec::negativity(),
                            InputSet::FullySeparable, quick(8)) >= -1e-9);
  }
}

TEST_CASE("survey histogram is a normalized distribution") {
  SurveyConfig sc;
  sc.n_gates = 30;
  sc.seed = 5;
  sc.with_error = true;
  sc.channels = {{ChannelKind::Depolarizing, 0.2, 0}};
  const SurveyResult s = haar_survey(sc, quick(3));
  CHECK(s.bin_edges.size() == 26);
  CHECK(s.bin_edges.back() == doctest::Approx(0.5));
  double total = 0.0;
  for (double m : s.masses) {
    total += m;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.values.size() == 30);
  CHECK(s.errors.size() == 30);
  for (double e : s.errors) {
    CHECK(e >= -1e-9);
  }
  CHECK(s.sd > 0.0);
  // Gate i of the survey is the same whatever the survey size.
  CHECK(survey_gate(sc, 7).params == survey_gate(SurveyConfig{.n_gates = 3, .seed = 5}, 7).params);

  sc.ensemble = SurveyEnsemble::Haar;
  sc.n_gates = 4;
  sc.with_error = false;
  CHECK(haar_survey(sc, quick(2)).values.size() == 4);
  sc.n_gates = 0;
  CHECK_THROWS_AS(haar_survey(sc, quick(2)), InvalidArgument);
}
