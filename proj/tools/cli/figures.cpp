#include "cli/figures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "cli/config.hpp"
#include "cli/shape.hpp"

namespace entpower::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> grid(double lo, double hi, int points) {
  std::vector<double> out;
  for (int k = 0; k < points; ++k) {
    out.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1));
  }
  return out;
}

std::string fmt(double v) { return format_number(v); }

ShapeCheck check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

// Per-figure budget, with command-line overrides taking precedence.
class Budget {
public:
  explicit Budget(const ReproduceOptions& o) : o_(o) {}

  OptimizerConfig optimizer(int default_restarts) const {
    OptimizerConfig cfg;
    cfg.restarts = o_.restarts.value_or(default_restarts);
    cfg.seed = o_.seed;
    cfg.jobs = o_.jobs;
    return cfg;
  }
  int realizations(bool reused, int reoptimized_default, int reused_default = 10000) const {
    return o_.realizations.value_or(reused ? reused_default : reoptimized_default);
  }
  int gates(int fallback) const { return o_.gates.value_or(fallback); }
  std::uint64_t seed() const { return o_.seed; }

private:
  ReproduceOptions o_;
};

bool reuse_applies(const PowerProblem& problem, const std::vector<double>& sds, const std::vector<int>& ties) {
  if (!has_parameter_independent_argmax(problem)) {
    return false;
  }
  if (problem.gate.family != GateFamily::CanonicalNL) {
    return true;
  }
  const bool no_spread = std::all_of(sds.begin(), sds.end(), [](double s) { return s == 0.0; });
  const bool all_tied = std::all_of(ties.begin(), ties.end(), [](int t) { return t == 0; });
  return no_spread || (!ties.empty() && all_tied);
}

struct Point {
  double mean = 0.0;
  double se = 0.0;
};

Point quench_point(PowerProblem problem, const std::vector<double>& means, const std::vector<double>& sds,
                   const std::vector<int>& ties, const Budget& budget, int reoptimized_realizations,
                   int restarts, int reused_realizations = 10000) {
  problem.gate = problem.gate.with_params(means);
  QuenchConfig qc;
  qc.means = means;
  qc.sds = sds;
  qc.ties = ties;
  qc.seed = budget.seed();
  qc.reuse_optimal_input = true;
  qc.realizations =
      budget.realizations(reuse_applies(problem, sds, ties), reoptimized_realizations, reused_realizations);
  const QuenchResult r = quenched_average_power(problem, qc, budget.optimizer(restarts));
  return {r.mean, r.stderr_mean};
}

struct Curve {
  std::vector<double> x, y, se;
};

Table curve_table(const std::string& xname, const std::string& yname, const Curve& c) {
  Table t({xname, yname, "stderr"});
  for (std::size_t k = 0; k < c.x.size(); ++k) {
    t.add_row({c.x[k], c.y[k], c.se[k]});
  }
  return t;
}

// Quenched power against a common sigma applied to every parameter.
Curve sigma_sweep(const PowerProblem& problem, const std::vector<double>& means, const std::vector<double>& sigmas,
                  const Budget& budget, int reoptimized_realizations, int restarts, int reused_realizations = 10000) {
  Curve c;
  for (double sigma : sigmas) {
    const Point p = quench_point(problem, means, std::vector<double>(means.size(), sigma), {}, budget,
                                 reoptimized_realizations, restarts, reused_realizations);
    c.x.push_back(sigma);
    c.y.push_back(p.mean);
    c.se.push_back(p.se);
  }
  return c;
}

std::string describe(const std::vector<double>& v) {
  std::ostringstream s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    s << (k ? " " : "") << fmt(v[k]);
  }
  return s.str();
}

// ---------------------------------------------------------------------------
// Diagonal-gate disorder figures.

struct DiagonalFigure {
  MeasureSpec measure;
  std::vector<std::vector<double>> means;  // one entry per U_d,k, k = 1..4
  std::string expected;                    // shape required of the U_d,1 curve
};

const std::map<std::string, DiagonalFigure>& diagonal_figures() {
  static const std::map<std::string, DiagonalFigure> figures{
      {"fig2",
       {MeasureSpec::ggm(),
        {{kPi / 10}, {kPi / 10, kPi / 6}, {kPi / 10, kPi / 6, kPi / 4}, {kPi / 10, kPi / 6, kPi / 4, 3 * kPi / 4}},
        "increasing"}},
      {"fig3",
       {MeasureSpec::ggm(),
        {{kPi}, {kPi, kPi / 15}, {kPi, kPi / 10, kPi / 15}, {kPi, kPi / 6, kPi / 10, kPi / 15}},
        "decreasing"}},
      {"fig4",
       {MeasureSpec::ggm(),
        {{kPi / 1.3}, {kPi, kPi / 4}, {kPi, kPi / 6, kPi / 2}, {kPi, kPi / 4, kPi / 9, kPi / 15}},
        "nonmonotone"}},
      {"fig5",
       {MeasureSpec::negativity(),
        {{kPi / 4}, {kPi / 2, kPi / 6}, {kPi / 2, kPi / 10, kPi / 15}, {kPi / 2, kPi / 6, kPi / 8, kPi / 10}},
        ""}},
  };
  return figures;
}

FigureReport diagonal_disorder(const std::string& id, const Budget& budget) {
  const DiagonalFigure& fig = diagonal_figures().at(id);
  const std::vector<double> sigmas = grid(0.0, 1.5, 16);
  const std::string yname = fig.measure.kind == MeasureKind::GGM ? "e_avg_ggm" : "e_avg_neg";
  FigureReport report{id, {}, {}};
  for (std::size_t k = 0; k < fig.means.size(); ++k) {
    const PowerProblem problem{GateSpec::diagonal(fig.means[k], 4), {}, fig.measure, InputSet::FullySeparable};
    // The single-phase curve reuses its optimal input, so 10^5 draws are cheap
    // and resolve the small bump of the nonmonotone case.
    const Curve c = sigma_sweep(problem, fig.means[k], sigmas, budget, 400, 4, 100000);
    const std::string name = "ud" + std::to_string(k + 1);
    report.tables.push_back({name, curve_table("sigma", yname, c)});
    if (k == 0 && !fig.expected.empty()) {
      bool ok = false;
      if (fig.expected == "increasing") {
        ok = is_increasing(c.y, c.se);
      } else if (fig.expected == "decreasing") {
        ok = is_decreasing(c.y, c.se);
      } else {
        ok = interior_extremum(c.y, c.se) >= 0;
      }
      report.checks.push_back(check(name + " " + fig.expected, ok, describe(c.y)));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Canonical-gate disorder figures: curves against the mean coupling, one per sigma.

FigureReport canonical_disorder(const std::string& id, const Budget& budget) {
  const std::vector<double> sds{0.0, 0.2, 0.4};
  FigureReport report{id, {}, {}};
  std::vector<double> depths;
  const bool tied_pair = id == "fig8";
  const MeasureSpec measure = id == "fig7" ? MeasureSpec::negativity() : MeasureSpec::ggm();
  const std::vector<double> xs = grid(0.0, kPi / 2, tied_pair ? 21 : 41);
  for (double sd : sds) {
    Curve c;
    for (double x : xs) {
      std::vector<double> means{x, x, x};
      std::vector<double> sigma(3, sd);
      std::vector<int> ties{0, 0, 0};
      if (tied_pair) {
        means[0] = 0.7;
        sigma[0] = 0.0;
        ties = {0, 1, 1};
      }
      const PowerProblem problem{GateSpec::canonical(means[0], means[1], means[2]), {}, measure,
                                 InputSet::FullySeparable};
      const Point p = quench_point(problem, means, sigma, ties, budget, 200, 4);
      c.x.push_back(x);
      c.y.push_back(p.mean);
      c.se.push_back(p.se);
    }
    depths.push_back(oscillation_depth(c.y));
    report.tables.push_back({"sigma" + fmt(sd), curve_table(tied_pair ? "mean_j3" : "mean_j",
                                                            measure.kind == MeasureKind::GGM ? "e_avg_ggm" : "e_avg_neg",
                                                            c)});
  }
  const bool shrinking = depths[1] < depths[0] && depths[2] < depths[1];
  report.checks.push_back(check("oscillation depth shrinks with sigma", shrinking, describe(depths)));
  return report;
}

// ---------------------------------------------------------------------------
// Survey of random canonical gates under single-party noise.

FigureReport survey_figure(const Budget& budget) {
  FigureReport report{"fig9", {}, {}};
  const OptimizerConfig opt = budget.optimizer(4);
  SurveyConfig base;
  base.n_gates = budget.gates(1000);
  base.seed = budget.seed();
  base.measure = MeasureSpec::negativity();

  const auto histogram = [](const SurveyResult& s) {
    Table t({"bin_lo", "bin_hi", "mass"});
    for (std::size_t b = 0; b < s.masses.size(); ++b) {
      t.add_row({s.bin_edges[b], s.bin_edges[b + 1], s.masses[b]});
    }
    return t;
  };

  Table summary({"channel", "p", "mean", "sd"});
  const SurveyResult clean = haar_survey(base, opt);
  report.tables.push_back({"p0", histogram(clean)});
  summary.add_row(std::vector<std::string>{"none", "0", fmt(clean.mean), fmt(clean.sd)});

  std::map<std::string, std::map<double, SurveyResult>> noisy;
  for (ChannelKind kind : {ChannelKind::AmplitudeDamping, ChannelKind::Depolarizing}) {
    for (double p : {0.2, 0.8}) {
      SurveyConfig sc = base;
      sc.channels = {{kind, p, 0}};
      sc.with_error = true;
      SurveyResult s = haar_survey(sc, opt);
      const std::string tag = to_string(kind) + "_p" + fmt(p);
      report.tables.push_back({tag, histogram(s)});
      Table errors({"power", "error"});
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        errors.add_row({s.values[i], s.errors[i]});
      }
      report.tables.push_back({tag + "_errors", std::move(errors)});
      summary.add_row(std::vector<std::string>{to_string(kind), fmt(p), fmt(s.mean), fmt(s.sd)});
      noisy[to_string(kind)][p] = std::move(s);
    }
  }
  report.tables.insert(report.tables.begin(), {"summary", std::move(summary)});

  for (const auto& [name, by_p] : noisy) {
    const SurveyResult& weak = by_p.at(0.2);
    const SurveyResult& strong = by_p.at(0.8);
    report.checks.push_back(check(name + " mean falls with p", clean.mean >= weak.mean && weak.mean > strong.mean,
                                  fmt(clean.mean) + " " + fmt(weak.mean) + " " + fmt(strong.mean)));
    std::size_t larger = 0;
    for (std::size_t i = 0; i < weak.errors.size(); ++i) {
      larger += strong.errors[i] > weak.errors[i] ? 1U : 0U;
    }
    report.checks.push_back(check(name + " error larger at p=0.8 for most gates", 2 * larger > weak.errors.size(),
                                  std::to_string(larger) + "/" + std::to_string(weak.errors.size())));
  }
  report.checks.push_back(check("dpc mean below adc mean at p=0.8",
                                noisy.at("dpc").at(0.8).mean < noisy.at("adc").at(0.8).mean));
  return report;
}

// ---------------------------------------------------------------------------
// Noise sweeps.

const std::vector<ChannelKind> kNoiseKinds{ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
                                           ChannelKind::Depolarizing};

double noisy_power(const GateSpec& gate, ChannelKind kind, double p, const MeasureSpec& measure, InputSet set,
                   const OptimizerConfig& opt) {
  const std::vector<ChannelSpec> channels = p > 0.0 ? on_all_qubits(kind, p, gate.qubits()) : std::vector<ChannelSpec>{};
  if (set == InputSet::Biseparable12_3 && gate.family == GateFamily::Diagonal) {
    return diagonal_bisep_power(PowerProblem{gate, channels, measure, set}, opt).value;
  }
  return noisy_entangling_power(gate, channels, measure, set, opt).value;
}

// Columns p, e_adc, e_pdc, e_dpc.
Table channel_sweep(const GateSpec& gate, const std::vector<double>& ps, const MeasureSpec& measure, InputSet set,
                    const OptimizerConfig& opt) {
  Table t({"p", "e_adc", "e_pdc", "e_dpc"});
  for (double p : ps) {
    std::vector<double> row{p};
    for (ChannelKind kind : kNoiseKinds) {
      row.push_back(noisy_power(gate, kind, p, measure, set, opt));
    }
    t.add_row(row);
  }
  return t;
}

FigureReport two_qubit_hierarchy(const Budget& budget) {
  FigureReport report{"fig10", {}, {}};
  const OptimizerConfig opt = budget.optimizer(20);
  const std::vector<double> ps = grid(0.0, 1.0, 21);
  const std::vector<std::pair<std::string, std::vector<double>>> gates{
      {"ud2", {kPi / 2, kPi / 6}}, {"ud4", {kPi / 2, kPi / 6, kPi / 8, kPi / 10}}};
  for (const auto& [name, phis] : gates) {
    Table t = channel_sweep(GateSpec::diagonal(phis, 4), ps, MeasureSpec::negativity(), InputSet::FullySeparable, opt);
    const auto adc = t.column("e_adc");
    const auto pdc = t.column("e_pdc");
    const auto dpc = t.column("e_dpc");
    double gap = 0.0;
    bool below = true;
    for (std::size_t k = 1; k + 1 < ps.size(); ++k) {
      gap = std::max(gap, std::abs(pdc[k] - dpc[k]));
      below = below && pdc[k] <= adc[k] + 1e-9 && dpc[k] <= adc[k] + 1e-9;
    }
    report.checks.push_back(check(name + " pdc equals dpc", gap <= 1e-5, "max gap " + fmt(gap)));
    report.checks.push_back(check(name + " pdc and dpc at most adc", below));
    report.checks.push_back(check(name + " non-increasing in p",
                                  is_nonincreasing(adc) && is_nonincreasing(pdc) && is_nonincreasing(dpc)));
    report.tables.push_back({name, std::move(t)});
  }
  return report;
}

// Gate-by-gate sweep of one channel; columns p, u1, ..., un.
Table gate_sweep(const std::vector<GateSpec>& gates, ChannelKind kind, const std::vector<double>& ps,
                 const MeasureSpec& measure, InputSet set, const OptimizerConfig& opt) {
  std::vector<std::string> header{"p"};
  for (std::size_t k = 0; k < gates.size(); ++k) {
    header.push_back("u" + std::to_string(k + 1));
  }
  Table t(header);
  for (double p : ps) {
    std::vector<double> row{p};
    for (const GateSpec& g : gates) {
      row.push_back(noisy_power(g, kind, p, measure, set, opt));
    }
    t.add_row(row);
  }
  return t;
}

// Some pair whose order flips at a sampled p <= p_max. The reference order is
// taken at the first sample where the two curves differ by more than 1e-6,
// since gates can tie without noise (every perfect entangler reaches 0.5).
std::string find_reversal(const Table& t, std::size_t gates, double p_max) {
  const auto ps = t.column("p");
  for (std::size_t a = 1; a <= gates; ++a) {
    const auto ua = t.column("u" + std::to_string(a));
    for (std::size_t b = a + 1; b <= gates; ++b) {
      const auto ub = t.column("u" + std::to_string(b));
      double reference = 0.0;
      for (std::size_t k = 0; k < ps.size() && ps[k] <= p_max + 1e-12; ++k) {
        const double diff = ua[k] - ub[k];
        if (std::abs(diff) <= 1e-6) {
          continue;
        }
        if (reference == 0.0) {
          reference = diff;
        } else if ((diff > 0.0) != (reference > 0.0)) {
          return "u" + std::to_string(a) + " vs u" + std::to_string(b) + " at p=" + fmt(ps[k]);
        }
      }
    }
  }
  return {};
}

FigureReport fixture_reversal(const Budget& budget) {
  FigureReport report{"fig11", {}, {}};
  std::vector<GateSpec> gates;
  for (int k = 1; k <= 5; ++k) {
    gates.push_back(GateSpec::from_matrix(fixture_haar(k)));
  }
  const Table t = gate_sweep(gates, ChannelKind::PhaseDamping, grid(0.0, 1.0, 21), MeasureSpec::negativity(),
                             InputSet::FullySeparable, budget.optimizer(20));
  const auto u1 = t.column("u1");
  const auto u2 = t.column("u2");
  report.checks.push_back(check("u1 above u2 without noise", u1[0] > u2[0] + 1e-6, fmt(u1[0]) + " " + fmt(u2[0])));
  const std::string reversal = find_reversal(t, gates.size(), 0.9);
  report.checks.push_back(check("some pair reverses for p <= 0.9", !reversal.empty(), reversal));
  report.tables.push_back({"fixtures", t});
  return report;
}

FigureReport three_qubit_disorder(const Budget& budget) {
  FigureReport report{"fig12", {}, {}};
  const std::vector<double> sigmas = grid(0.0, 1.5, 11);
  std::map<std::string, Curve> curves;
  for (double mean : {2.4161, 0.7854}) {
    for (InputSet set : {InputSet::FullySeparable, InputSet::Biseparable12_3}) {
      const PowerProblem problem{GateSpec::diagonal({mean}, 8), {}, MeasureSpec::ggm(), set};
      const Curve c = sigma_sweep(problem, {mean}, sigmas, budget, 100, 4);
      const std::string name = to_string(set) + "_mean" + fmt(mean);
      report.tables.push_back({name, curve_table("sigma", "e_avg_ggm", c)});
      curves[name] = c;
    }
  }
  const Curve& bs_hi = curves.at("bs_mean2.4161");
  report.checks.push_back(check("bs at 2.4161 nonmonotone", interior_extremum(bs_hi.y, bs_hi.se) >= 0,
                                describe(bs_hi.y)));
  const Curve& fs_hi = curves.at("fs_mean2.4161");
  report.checks.push_back(check("fs at 2.4161 decreasing", is_decreasing(fs_hi.y, fs_hi.se), describe(fs_hi.y)));
  for (const char* name : {"fs_mean0.7854", "bs_mean0.7854"}) {
    const Curve& c = curves.at(name);
    report.checks.push_back(check(std::string(name) + " increasing", is_increasing(c.y, c.se), describe(c.y)));
  }

  Table larger({"sigma", "e3", "e4", "e5"});
  std::vector<Curve> by_size;
  for (int n : {3, 4, 5}) {
    const auto dim = static_cast<Eigen::Index>(1) << n;
    const PowerProblem problem{GateSpec::diagonal({2.4161}, dim), {}, MeasureSpec::ggm(), InputSet::FullySeparable};
    by_size.push_back(sigma_sweep(problem, {2.4161}, sigmas, budget, n == 3 ? 100 : 40, 4));
  }
  for (std::size_t k = 0; k < sigmas.size(); ++k) {
    larger.add_row({sigmas[k], by_size[0].y[k], by_size[1].y[k], by_size[2].y[k]});
  }
  for (std::size_t n = 1; n < by_size.size(); ++n) {
    report.checks.push_back(check(std::to_string(n + 3) + " qubits decreasing",
                                  is_decreasing(by_size[n].y, by_size[n].se), describe(by_size[n].y)));
  }
  report.tables.push_back({"fs_nqubit", std::move(larger)});
  return report;
}

struct ThreeQubitSweeps {
  Table fs;
  Table bs;
};

ThreeQubitSweeps monogamy_sweeps(const GateSpec& gate, const Budget& budget) {
  const std::vector<double> ps = grid(0.0, 1.0, 11);
  const OptimizerConfig opt = budget.optimizer(40);
  return {channel_sweep(gate, ps, MeasureSpec::monogamy(), InputSet::FullySeparable, opt),
          channel_sweep(gate, ps, MeasureSpec::monogamy(), InputSet::Biseparable12_3, opt)};
}

bool interior(double p) { return p > 0.05 && p < 0.95; }

FigureReport diagonal_noise(const Budget& budget) {
  FigureReport report{"fig13", {}, {}};
  ThreeQubitSweeps s = monogamy_sweeps(GateSpec::diagonal({kPi}, 8), budget);
  const auto ps = s.fs.column("p");
  const auto fs_dpc = s.fs.column("e_dpc");
  const auto bs_dpc = s.bs.column("e_dpc");
  std::string crossing;
  std::string merged;
  bool bs_above = true;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (!interior(ps[k])) {
      continue;
    }
    if (crossing.empty() && fs_dpc[k] > bs_dpc[k] + 1e-7) {
      crossing = "p=" + fmt(ps[k]);
    }
    if (merged.empty() && bs_dpc[k] > 1e-6 && std::abs(fs_dpc[k] - bs_dpc[k]) <= 1e-7) {
      merged = "p=" + fmt(ps[k]);
    }
    for (const char* col : {"e_adc", "e_pdc"}) {
      bs_above = bs_above && s.bs.column(col)[k] > s.fs.column(col)[k];
    }
  }
  report.checks.push_back(check("fs exceeds bs under dpc somewhere", !crossing.empty(), crossing));
  report.checks.push_back(check("bs optimum becomes fully separable under dpc", !merged.empty(), merged));
  report.checks.push_back(check("bs above fs under adc and pdc", bs_above));
  report.tables.push_back({"fs", std::move(s.fs)});
  report.tables.push_back({"bs", std::move(s.bs)});
  return report;
}

FigureReport permutation_noise(const Budget& budget) {
  FigureReport report{"fig14", {}, {}};
  ThreeQubitSweeps s = monogamy_sweeps(GateSpec::transposition(1, 7, 8), budget);
  const auto ps = s.fs.column("p");
  bool fs_above = true;
  bool adc_top = true;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    for (const char* col : {"e_adc", "e_pdc", "e_dpc"}) {
      fs_above = fs_above && s.fs.column(col)[k] >= s.bs.column(col)[k] - 1e-6;
    }
    for (const Table* t : {&s.fs, &s.bs}) {
      const double adc = t->column("e_adc")[k];
      adc_top = adc_top && adc >= t->column("e_pdc")[k] - 1e-6 && adc >= t->column("e_dpc")[k] - 1e-6;
    }
  }
  report.checks.push_back(check("fs at least bs for every channel", fs_above));
  report.checks.push_back(check("adc most robust", adc_top));
  report.tables.push_back({"fs", std::move(s.fs)});
  report.tables.push_back({"bs", std::move(s.bs)});
  return report;
}

FigureReport haar_noise(const Budget& budget) {
  FigureReport report{"fig15", {}, {}};
  std::vector<GateSpec> gates;
  for (std::uint64_t k = 1; k <= 5; ++k) {
    gates.push_back(GateSpec::haar(8, budget.seed() * 100 + k));
  }
  const std::vector<double> ps = grid(0.0, 1.0, 11);
  for (InputSet set : {InputSet::FullySeparable, InputSet::Biseparable12_3}) {
    const Table t =
        gate_sweep(gates, ChannelKind::PhaseDamping, ps, MeasureSpec::monogamy(), set, budget.optimizer(12));
    const std::string reversal = find_reversal(t, gates.size(), 1.0);
    report.checks.push_back(check(to_string(set) + " ordering changes", !reversal.empty(), reversal));
    report.tables.push_back({to_string(set), t});
  }
  return report;
}

using FigureFn = std::function<FigureReport(const Budget&)>;

const std::map<std::string, FigureFn>& registry() {
  static const std::map<std::string, FigureFn> figures{
      {"fig2", [](const Budget& b) { return diagonal_disorder("fig2", b); }},
      {"fig3", [](const Budget& b) { return diagonal_disorder("fig3", b); }},
      {"fig4", [](const Budget& b) { return diagonal_disorder("fig4", b); }},
      {"fig5", [](const Budget& b) { return diagonal_disorder("fig5", b); }},
      {"fig6", [](const Budget& b) { return canonical_disorder("fig6", b); }},
      {"fig7", [](const Budget& b) { return canonical_disorder("fig7", b); }},
      {"fig8", [](const Budget& b) { return canonical_disorder("fig8", b); }},
      {"fig9", survey_figure},
      {"fig10", two_qubit_hierarchy},
      {"fig11", fixture_reversal},
      {"fig12", three_qubit_disorder},
      {"fig13", diagonal_noise},
      {"fig14", permutation_noise},
      {"fig15", haar_noise},
  };
  return figures;
}

}  // namespace

PowerResult diagonal_bisep_power(const PowerProblem& problem, const OptimizerConfig& cfg) {
  if (problem.gate.family != GateFamily::Diagonal || problem.input_set != InputSet::Biseparable12_3) {
    throw InvalidArgument("diagonal_bisep_power: needs a diagonal gate and biseparable inputs");
  }
  PowerProblem product = problem;
  product.input_set = InputSet::FullySeparable;
  ProductParams seed = maximize_power(product, cfg).product_argmax();
  seed.xis[1] = -seed.xis[0];
  return maximize_power(problem, cfg, {bisep_from_product(seed).value().flatten()});
}

std::vector<std::string> figure_ids() {
  std::vector<std::string> ids;
  for (int k = 2; k <= 15; ++k) {
    ids.push_back("fig" + std::to_string(k));
  }
  return ids;
}

FigureReport reproduce_figure(const std::string& id, const ReproduceOptions& options) {
  const auto it = registry().find(id);
  if (it == registry().end()) {
    std::string known;
    for (const auto& name : figure_ids()) {
      known += (known.empty() ? "" : ", ") + name;
    }
    throw ConfigError("figure", "unknown figure '" + id + "'; available: " + known);
  }
  return it->second(Budget(options));
}

std::vector<std::filesystem::path> write_figure(const FigureReport& report, const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  for (const auto& [name, table] : report.tables) {
    const std::filesystem::path path = dir / (report.id + "_" + name + ".csv");
    table.write(path);
    written.push_back(path);
  }
  return written;
}

}  // namespace entpower::cli
