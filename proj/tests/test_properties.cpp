#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "entpower/oracles.hpp"
#include "entpower/parallel.hpp"
#include "entpower/power.hpp"

using namespace entpower;
namespace eo = entpower::oracles;

namespace {

constexpr double kPi = std::numbers::pi;

OptimizerConfig opt(int restarts, std::uint64_t seed = 11) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

double power(const GateSpec& g, const MeasureSpec& m) {
  return entangling_power(g, m, InputSet::FullySeparable, opt(8)).value;
}

// 20 interior points of (lo, hi).
std::vector<double> interior_grid(double lo, double hi) {
  std::vector<double> xs;
  for (int k = 1; k <= 20; ++k) {
    xs.push_back(lo + (hi - lo) * static_cast<double>(k) / 21.0);
  }
  return xs;
}

}  // namespace

TEST_CASE("optimized power of the single-phase diagonal gate follows its closed forms") {
  for (double phi : interior_grid(0.0, 2.0 * kPi)) {
    CAPTURE(phi);
    const GateSpec g = GateSpec::diagonal({phi}, 4);
    CHECK(std::abs(power(g, MeasureSpec::ggm()) - eo::ggm_diag1(phi)) < 1e-6);
    CHECK(std::abs(power(g, MeasureSpec::negativity()) - eo::neg_diag1(phi)) < 1e-6);
  }
}

TEST_CASE("optimized power of the four-phase diagonal gate follows its closed forms") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int k = 0; k < 20; ++k) {
    const std::vector<double> phis{angle(rng), angle(rng), angle(rng), angle(rng)};
    CAPTURE(k);
    const GateSpec g = GateSpec::diagonal(phis, 4);
    CHECK(std::abs(power(g, MeasureSpec::ggm()) - eo::ggm_diag4(phis[0], phis[1], phis[2], phis[3])) < 1e-6);
    CHECK(std::abs(power(g, MeasureSpec::negativity()) - eo::neg_diag4(phis[0], phis[1], phis[2], phis[3])) < 1e-6);
  }
}

TEST_CASE("optimized power of the equal-coupling canonical gate follows its closed forms") {
  for (double j : interior_grid(0.0, kPi / 2)) {
    CAPTURE(j);
    const GateSpec g = GateSpec::canonical(j, j, j);
    CHECK(std::abs(power(g, MeasureSpec::ggm()) - eo::ggm_unl_equalJ(j)) < 1e-6);
    CHECK(std::abs(power(g, MeasureSpec::negativity()) - eo::neg_unl_noiseless_adc_pdc(j)) < 1e-6);
  }
}

TEST_CASE("local noise on the input never raises the negativity power") {
  const std::vector<GateSpec> gates{GateSpec::diagonal({kPi / 2, kPi / 6}, 4), GateSpec::canonical(0.7, 0.3, 0.1),
                                    GateSpec::haar(4, 7), GateSpec::from_matrix(fixture_haar(1))};
  for (const GateSpec& g : gates) {
    const double clean = power(g, MeasureSpec::negativity());
    for (ChannelKind kind : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping, ChannelKind::Depolarizing}) {
      for (double p : {0.3, 0.7}) {
        for (const auto& noise : {std::vector<ChannelSpec>{{kind, p, 0}}, std::vector<ChannelSpec>{{kind, p, 1}},
                                  on_all_qubits(kind, p, 2)}) {
          const double noisy =
              noisy_entangling_power(g, noise, MeasureSpec::negativity(), InputSet::FullySeparable, opt(4)).value;
          CHECK(noisy <= clean + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("three-qubit negativity power under noise stays below the noiseless power") {
  const GateSpec g = GateSpec::haar(8, 2);
  for (InputSet set : {InputSet::FullySeparable, InputSet::Biseparable12_3}) {
    const double clean = entangling_power(g, MeasureSpec::negativity(), set, opt(8)).value;
    for (ChannelKind kind : {ChannelKind::AmplitudeDamping, ChannelKind::Depolarizing}) {
      const double noisy =
          noisy_entangling_power(g, on_all_qubits(kind, 0.4, 3), MeasureSpec::negativity(), set, opt(3)).value;
      CHECK(noisy <= clean + 1e-9);
    }
  }
}

TEST_CASE("restart monotonicity holds for noisy and biseparable problems") {
  const PowerProblem noisy{GateSpec::canonical(0.6, 0.4, 0.2), {{ChannelKind::Depolarizing, 0.3, 1}},
                           MeasureSpec::negativity(), InputSet::FullySeparable};
  const PowerProblem bisep{GateSpec::haar(8, 4), {}, MeasureSpec::monogamy(), InputSet::Biseparable12_3};
  for (const PowerProblem& problem : {noisy, bisep}) {
    double previous = -1.0;
    for (int restarts : {1, 3, 6}) {
      const double v = maximize_power(problem, opt(restarts, 5)).value;
      CHECK(v >= previous);
      previous = v;
    }
  }
}

TEST_CASE("survey and error metric are bitwise identical across worker counts") {
  SurveyConfig sc;
  sc.n_gates = 24;
  sc.seed = 8;
  sc.channels = {{ChannelKind::AmplitudeDamping, 0.5, 0}};
  sc.with_error = true;
  OptimizerConfig one = opt(3);
  OptimizerConfig many = one;
  many.jobs = 8;
  const SurveyResult a = haar_survey(sc, one);
  const SurveyResult b = haar_survey(sc, many);
  CHECK(a.values == b.values);
  CHECK(a.errors == b.errors);
  CHECK(a.masses == b.masses);
  CHECK(a.mean == b.mean);
  CHECK(a.sd == b.sd);
}

TEST_CASE("haar eigenphases are uniform on the circle") {
  // One eigenphase per matrix, picked by an independent draw, so the samples
  // are independent draws from the uniform marginal.
  constexpr int kSamples = 1000;
  constexpr int kBins = 20;
  std::vector<int> counts(kBins, 0);
  std::mt19937_64 pick(99);
  for (int s = 0; s < kSamples; ++s) {
    const Eigen::ComplexEigenSolver<ComplexMatrix> es(haar_random(4, 5000 + static_cast<std::uint64_t>(s)));
    const auto idx = static_cast<Eigen::Index>(pick() % 4);
    double phase = std::arg(es.eigenvalues()(idx));
    if (phase < 0.0) {
      phase += 2.0 * kPi;
    }
    ++counts[std::min(kBins - 1, static_cast<int>(phase / (2.0 * kPi) * kBins))];
  }
  const double expected = static_cast<double>(kSamples) / kBins;
  double chi2 = 0.0;
  for (int c : counts) {
    chi2 += (c - expected) * (c - expected) / expected;
  }
  CAPTURE(chi2);
  CHECK(chi2 < 36.19);  // 99th percentile of chi-square with 19 degrees of freedom
}

TEST_CASE("haar trace moments match the invariant measure") {
  // E[Tr U] = 0 and E|Tr U|^2 = 1 for Haar U(d); a QR draw without the phase
  // fix fails the second moment.
  constexpr int kSamples = 4000;
  Complex mean_trace{0.0, 0.0};
  double mean_sq = 0.0;
  for (int s = 0; s < kSamples; ++s) {
    const Complex t = haar_random(4, 90000 + static_cast<std::uint64_t>(s)).trace();
    mean_trace += t;
    mean_sq += std::norm(t);
  }
  mean_trace /= static_cast<double>(kSamples);
  mean_sq /= static_cast<double>(kSamples);
  CHECK(std::abs(mean_trace) < 0.06);
  CHECK(mean_sq == doctest::Approx(1.0).epsilon(0.08));
}

TEST_CASE("haar draws are left invariant: V U has the moments of U") {
  const ComplexMatrix v = haar_random(4, 123456);
  constexpr int kSamples = 4000;
  double direct = 0.0;
  double rotated = 0.0;
  for (int s = 0; s < kSamples; ++s) {
    const ComplexMatrix u = haar_random(4, 70000 + static_cast<std::uint64_t>(s));
    direct += std::pow(std::norm(u(1, 2)), 2);
    rotated += std::pow(std::norm((v * u)(1, 2)), 2);
  }
  const double target = 2.0 / (4.0 * 5.0);
  CHECK(direct / kSamples == doctest::Approx(target).epsilon(0.1));
  CHECK(rotated / kSamples == doctest::Approx(target).epsilon(0.1));
}

TEST_CASE("equal-coupling canonical gate acts on the symmetric Bell state by a phase") {
  for (double j : {0.2, 0.9, 1.4}) {
    StateVector psi_plus = StateVector::Zero(4);
    psi_plus(1) = psi_plus(2) = 1.0 / std::numbers::sqrt2;
    const StateVector out = canonical_nl(j, j, j) * psi_plus;
    const Complex phase = psi_plus.dot(out);
    CHECK(std::abs(phase - std::polar(1.0, -j)) < 1e-12);
    CHECK((out - phase * psi_plus).norm() < 1e-12);
  }
}
