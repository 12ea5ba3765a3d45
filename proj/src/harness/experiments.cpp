#include "smoothlab/harness/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "smoothlab/classes/hypothesis.hpp"
#include "smoothlab/compression/compression.hpp"
#include "smoothlab/core/errors.hpp"
#include "smoothlab/core/json_io.hpp"
#include "smoothlab/covering/bounds.hpp"
#include "smoothlab/covering/complexity.hpp"
#include "smoothlab/covering/cover.hpp"
#include "smoothlab/covering/dimension.hpp"
#include "smoothlab/covering/lemmas.hpp"
#include "smoothlab/harness/factory.hpp"
#include "smoothlab/learners/learners.hpp"

namespace smoothlab::harness {

using classes::Hypothesis;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double binomial_se(double p, std::size_t n) { return std::sqrt(p * (1.0 - p) / static_cast<double>(n)); }

// Outcome of one regret trial.
struct RegretTrial {
  adversaries::StreamBundle bundle;
  std::int64_t comparator = 0;
  std::vector<RegretReport> runs;
  std::optional<double> expected_loss;  // exact, for REWA learners
  std::size_t experts = 0;
};

RegretTrial play_trial(const ExperimentConfig& c, std::size_t horizon, std::uint64_t seed) {
  RegretTrial out;
  Rng adversary(seed, kAdversaryStream);
  out.bundle = make_bundle(c, horizon, adversary);
  out.comparator = comparator_loss(out.bundle.stream, make_comparator(c, out.bundle, horizon, seed));
  for (std::size_t r = 0; r < c.seeds_per_stream; ++r) {
    auto learner = make_learner(c, horizon, seed);
    Rng rng(seed, kLearnerStream + r * 16);
    auto report = run_game(out.bundle.stream, *learner, rng);
    report.comparator_loss = out.comparator;
    out.runs.push_back(std::move(report));
    if (r == 0) {
      if (auto* rewa = dynamic_cast<learners::RewaLearner*>(learner.get())) {
        out.experts = rewa->expert_count();
        out.expected_loss = learners::rewa_expected_cumulative_loss(rewa->experts(), rewa->eta(), out.bundle.stream);
      }
    }
  }
  return out;
}

}  // namespace

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

json to_json(const TrialBundle& b) {
  return {{"config", b.config},   {"trial", b.trial},
          {"seed", b.seed},       {"T", b.horizon},
          {"bundle", adversaries::to_json(b.bundle)}, {"report", json_io::to_json(b.report)}};
}

TrialBundle trial_bundle_from_json(const json& j) {
  TrialBundle b;
  b.config = json_io::require(j, "config");
  b.trial = json_io::require(j, "trial").get<std::size_t>();
  b.seed = json_io::require(j, "seed").get<std::uint64_t>();
  b.horizon = json_io::require(j, "T").get<std::size_t>();
  b.bundle = adversaries::bundle_from_json(json_io::require(j, "bundle"));
  b.report = json_io::report_from_json(json_io::require(j, "report"));
  return b;
}

ReplayResult replay(const TrialBundle& b) {
  const auto config = parse_config(b.config);
  ReplayResult out;
  out.original = b.report;
  auto learner = make_learner(config, b.horizon, b.seed);
  Rng rng(b.seed, kLearnerStream);
  out.replayed = run_game(b.bundle.stream, *learner, rng);
  out.replayed.comparator_loss = comparator_loss(b.bundle.stream, make_comparator(config, b.bundle, b.horizon, b.seed));
  out.identical = out.replayed == out.original;
  if (!out.identical) {
    std::ostringstream os;
    if (out.replayed.seed != out.original.seed) os << "seed differs; ";
    if (out.replayed.horizon != out.original.horizon) os << "horizon differs; ";
    if (out.replayed.learner_loss != out.original.learner_loss) {
      os << "learner loss " << out.original.learner_loss << " vs " << out.replayed.learner_loss << "; ";
    }
    if (out.replayed.comparator_loss != out.original.comparator_loss) os << "comparator loss differs; ";
    if (out.replayed.per_round_losses != out.original.per_round_losses) os << "per-round losses differ; ";
    out.difference = os.str();
  }
  return out;
}

ExperimentReport run_regret_experiment(const ExperimentConfig& c, std::vector<TrialBundle>* bundles) {
  validate_pairing(c);
  const auto t0 = Clock::now();
  ExperimentReport report;
  report.kind = to_string(c.kind);
  report.config = to_json(c);
  const auto& th = c.thresholds;
  PlotSeries regret_vs_t{"regret_vs_T", "T", "mean regret", {}, {}, {}};
  PlotSeries normalized{"regret_over_T_vs_T", "T", "mean regret / T", {}, {}, {}};
  json per_horizon = json::array();

  for (std::size_t horizon : c.horizons) {
    std::vector<RegretTrial> trials(c.trials);
    parallel_for(c.trials, c.threads, [&](std::size_t i) { trials[i] = play_trial(c, horizon, c.trial_seed(i)); });

    std::vector<double> regrets, comparators, learner_losses, expected;
    std::size_t distinct = 0;
    double worst_stream_excess = -INFINITY;
    double worst_expected_excess = -INFINITY;
    std::size_t failing_streams = 0;
    const double T = static_cast<double>(horizon);
    double rewa_bound = 0.0;
    for (std::size_t i = 0; i < trials.size(); ++i) {
      const auto& tr = trials[i];
      std::vector<double> run_regrets, run_losses;
      for (const auto& r : tr.runs) {
        run_regrets.push_back(static_cast<double>(r.regret()));
        run_losses.push_back(static_cast<double>(r.learner_loss));
      }
      const auto rs = summarize(run_regrets);
      const auto ls = summarize(run_losses);
      regrets.push_back(rs.mean);
      learner_losses.push_back(ls.mean);
      comparators.push_back(static_cast<double>(tr.comparator));
      distinct += tr.bundle.distinct;
      json rec{{"T", horizon},
               {"trial", i},
               {"seed", c.trial_seed(i)},
               {"learner_loss", ls.mean},
               {"comparator_loss", tr.comparator},
               {"regret", rs.mean},
               {"max_run_loss", ls.max},
               {"distinct", tr.bundle.distinct},
               {"resamples", tr.bundle.resamples}};
      if (tr.runs.size() > 1) rec["regret_se"] = rs.std_error;
      if (tr.expected_loss) {
        const double er = *tr.expected_loss - static_cast<double>(tr.comparator);
        rec["expected_regret"] = er;
        expected.push_back(er);
        rewa_bound = learners::rewa_regret_bound(tr.experts, horizon);
        if (tr.runs.size() > 1) {
          const double excess = rs.mean - (rewa_bound + th.se_allowance * rs.std_error);
          worst_stream_excess = std::max(worst_stream_excess, excess);
          failing_streams += excess > 0.0;
        }
        worst_expected_excess = std::max(worst_expected_excess, er - rewa_bound);
      }
      report.records.push_back(std::move(rec));
      if (bundles && i < c.dump_bundles) {
        bundles->push_back({to_json(c), i, c.trial_seed(i), horizon, tr.bundle, tr.runs.front()});
      }
    }

    const auto rs = summarize(regrets);
    const auto cs = summarize(comparators);
    const auto ls = summarize(learner_losses);
    const std::string at_t = " (T=" + std::to_string(horizon) + ")";
    json h{{"T", horizon},
           {"mean_regret", rs.mean},
           {"regret_se", rs.std_error},
           {"median_regret", rs.median},
           {"mean_learner_loss", ls.mean},
           {"mean_comparator_loss", cs.mean},
           {"max_comparator_loss", cs.max}};

    const auto& adv = c.adversary.kind;
    if (adv == "separation" && c.domain.is_unit()) {
      report.flags.push_back(at_least("separation-lower-bound" + at_t, "mean regret >= lower_fraction * T", rs.mean,
                                      th.lower_fraction * T, "SE " + fmt(rs.std_error)));
    }
    if (adv == "separation" && c.domain.is_grid()) {
      const double m = c.domain.side();
      report.flags.push_back(at_least("grid-separation-lower-bound" + at_t, "mean regret >= grid_fraction * m / 8",
                                      rs.mean, th.grid_fraction * m / 8.0, "SE " + fmt(rs.std_error)));
      double p = 1.0;
      const double cells = static_cast<double>(c.domain.cells());
      for (std::uint32_t i = 1; i < c.domain.side(); ++i) p *= 1.0 - i / cells;
      const double freq = static_cast<double>(distinct) / static_cast<double>(c.trials);
      const double se = binomial_se(p, c.trials);
      Flag f{"grid-distinctness" + at_t, "|distinct frequency - prod_{i<m}(1 - i/m^2)| <= se_allowance * SE",
             std::abs(freq - p), th.se_allowance * se, "<=", std::abs(freq - p) <= th.se_allowance * se,
             "frequency " + fmt(freq) + ", predicted " + fmt(p)};
      report.flags.push_back(f);
      h["distinct_frequency"] = freq;
      h["distinct_predicted"] = p;
    }
    if (adv == "coinflip") {
      report.flags.push_back(at_most("finite-support-witness" + at_t, "comparator loss is exactly 0 in every trial",
                                     cs.max, 0.0));
      const double ratio = rs.mean / T;
      report.flags.push_back({"coinflip-lower-bound" + at_t, "mean regret / T within [coinflip_low, coinflip_high]",
                              ratio, th.coinflip_low, "in", ratio >= th.coinflip_low && ratio <= th.coinflip_high,
                              "band [" + fmt(th.coinflip_low) + ", " + fmt(th.coinflip_high) + "]"});
    }
    if (c.learner.kind == "memorize_constant") {
      report.flags.push_back(at_most("memorize-mistakes" + at_t, "learner makes at most one mistake in every trial",
                                     ls.max, 1.0));
    }
    if (!expected.empty()) {
      const auto es = summarize(expected);
      h["expected_regret_mean"] = es.mean;
      h["expected_regret_max"] = es.max;
      h["rewa_bound"] = rewa_bound;
      if (c.seeds_per_stream > 1) {
        report.flags.push_back(at_most("rewa-guarantee-per-stream" + at_t,
                                       "every stream: seed-averaged regret <= sqrt(2 T ln N) + se_allowance * SE",
                                       worst_stream_excess, 0.0,
                                       std::to_string(failing_streams) + " of " + std::to_string(c.trials) +
                                           " streams over; bound " + fmt(rewa_bound)));
      } else if (adv != "separation") {
        report.flags.push_back(at_most("rewa-guarantee" + at_t, "mean regret <= sqrt(2 T ln N) + se_allowance * SE",
                                       rs.mean, rewa_bound + th.se_allowance * rs.std_error,
                                       "bound " + fmt(rewa_bound)));
      }
      if (adv != "separation") {
        report.flags.push_back(at_most("rewa-guarantee-expected" + at_t,
                                       "every stream: exact expected regret <= sqrt(2 T ln N)", worst_expected_excess,
                                       0.0, "bound " + fmt(rewa_bound)));
      }
    }
    per_horizon.push_back(std::move(h));
    regret_vs_t.x.push_back(T);
    regret_vs_t.y.push_back(rs.mean);
    regret_vs_t.band.push_back(rs.std_error);
    normalized.x.push_back(T);
    normalized.y.push_back(rs.mean / T);
    normalized.band.push_back(rs.std_error / T);
  }
  report.results["horizons"] = std::move(per_horizon);
  report.plots = {regret_vs_t, normalized};
  report.seconds = seconds_since(t0);
  return report;
}

namespace {

// Realizable separation source: a hidden h^theta over L distinct points;
// with probability on_mass x is the t-th point with P(t) proportional to
// 1/t, otherwise x is uniform on [0,1).
struct PacSource {
  classes::SeparationHypothesis target;
  std::vector<double> atom;  // probability of each sequence point
  std::vector<double> cumulative;
  double on_mass = 0.5;

  static PacSource draw(std::size_t length, Rng& rng) {
    const auto mu = BaseMeasure::uniform_unit();
    std::vector<Instance> pts;
    while (pts.size() < length) {
      const auto x = mu.sample(rng);
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    BitString theta(length);
    for (std::size_t i = 0; i < length; ++i) theta[i] = rng.coin();
    PacSource s{classes::SeparationHypothesis(make_sequence(pts), std::move(theta)), {}, {}, 0.5};
    double harmonic = 0.0;
    for (std::size_t t = 1; t <= length; ++t) harmonic += 1.0 / static_cast<double>(t);
    double acc = 0.0;
    for (std::size_t t = 1; t <= length; ++t) {
      s.atom.push_back(s.on_mass / (static_cast<double>(t) * harmonic));
      acc += 1.0 / (static_cast<double>(t) * harmonic);
      s.cumulative.push_back(acc);
    }
    return s;
  }

  Instance sample(Rng& rng) const {
    if (rng.uniform01() < on_mass) {
      const double u = rng.uniform01() * cumulative.back();
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      const auto t = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), atom.size() - 1);
      return target.sequence()[t];
    }
    return BaseMeasure::uniform_unit().sample(rng);
  }

  // Exact on the atoms; the continuous part by `holdout` fresh draws.
  double error(const classes::SeparationHypothesis& h, std::size_t holdout, Rng& rng) const {
    double err = 0.0;
    for (std::size_t t = 0; t < atom.size(); ++t) {
      const auto& x = target.sequence()[t];
      if (h(x) != target(x)) err += atom[t];
    }
    if (holdout > 0) {
      std::size_t wrong = 0;
      for (std::size_t k = 0; k < holdout; ++k) {
        const auto x = BaseMeasure::uniform_unit().sample(rng);
        wrong += h(x) != target(x);
      }
      err += (1.0 - on_mass) * static_cast<double>(wrong) / static_cast<double>(holdout);
    }
    return err;
  }
};

}  // namespace

ExperimentReport run_pac_curve(const ExperimentConfig& c) {
  const auto t0 = Clock::now();
  ExperimentReport report;
  report.kind = to_string(c.kind);
  report.config = to_json(c);
  struct Cell {
    double error = 0.0;
    double bound = 0.0;
  };
  const std::size_t cells = c.n_grid.size() * c.trials;
  std::vector<Cell> out(cells);
  parallel_for(cells, c.threads, [&](std::size_t k) {
    const std::size_t ni = k / c.trials;
    const std::size_t trial = k % c.trials;
    const std::size_t n = c.n_grid[ni];
    Rng rng(c.trial_seed(trial), 16 + ni);
    const auto source = PacSource::draw(c.cls.sequence_length, rng);
    std::vector<LabeledPair> sample;
    sample.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
      const auto x = source.sample(rng);
      sample.push_back({x, source.target(x)});
    }
    const auto h = compression::compression_learner(sample);
    out[k] = {source.error(h, c.holdout, rng), compression::pac_error_bound(static_cast<double>(n), 1.0, c.delta)};
  });

  PlotSeries err_plot{"error_vs_n", "n", "mean holdout error", {}, {}, {}};
  PlotSeries bound_plot{"bound_vs_n", "n", "pac error bound", {}, {}, {}};
  json per_n = json::array();
  std::vector<double> medians;
  const double se_delta = binomial_se(c.delta, c.trials);
  for (std::size_t ni = 0; ni < c.n_grid.size(); ++ni) {
    std::vector<double> errors;
    std::size_t violations = 0;
    for (std::size_t trial = 0; trial < c.trials; ++trial) {
      const auto& cell = out[ni * c.trials + trial];
      errors.push_back(cell.error);
      const bool violated = cell.error > cell.bound;
      violations += violated;
      report.records.push_back({{"n", c.n_grid[ni]},
                                {"trial", trial},
                                {"seed", c.trial_seed(trial)},
                                {"error", cell.error},
                                {"bound", cell.bound},
                                {"violated", violated}});
    }
    const auto es = summarize(errors);
    medians.push_back(es.median);
    const double freq = static_cast<double>(violations) / static_cast<double>(c.trials);
    const double bound = out[ni * c.trials].bound;
    per_n.push_back({{"n", c.n_grid[ni]},
                     {"mean_error", es.mean},
                     {"error_se", es.std_error},
                     {"median_error", es.median},
                     {"bound", bound},
                     {"best_in_class_error", 0.0},
                     {"violation_frequency", freq}});
    report.flags.push_back(at_most("pac-bound-violations (n=" + std::to_string(c.n_grid[ni]) + ")",
                                   "violation frequency <= delta + se_allowance * SE", freq,
                                   c.delta + c.thresholds.se_allowance * se_delta,
                                   "SE taken at delta: " + fmt(se_delta)));
    err_plot.x.push_back(static_cast<double>(c.n_grid[ni]));
    err_plot.y.push_back(es.mean);
    err_plot.band.push_back(es.std_error);
    bound_plot.x.push_back(static_cast<double>(c.n_grid[ni]));
    bound_plot.y.push_back(bound);
    bound_plot.band.push_back(0.0);
  }
  if (c.n_grid.size() > 1) {
    const auto lo = std::min_element(c.n_grid.begin(), c.n_grid.end()) - c.n_grid.begin();
    const auto hi = std::max_element(c.n_grid.begin(), c.n_grid.end()) - c.n_grid.begin();
    Flag f{"pac-consistency", "median error at the largest n < median error at the smallest n", medians[hi], medians[lo],
           "<", medians[hi] < medians[lo], ""};
    report.flags.push_back(f);
  }
  report.results["per_n"] = std::move(per_n);
  report.plots = {err_plot, bound_plot};
  report.seconds = seconds_since(t0);
  return report;
}

ExperimentReport run_sufficiency_experiment(const ExperimentConfig& c) {
  const auto t0 = Clock::now();
  const auto& fam = c.cls.family;
  if (fam != "thresholds" && fam != "constants" && fam != "rational_indicators") {
    throw ConfigError("field 'class.family': sufficiency runs need thresholds, constants or rational_indicators");
  }
  if (fam == "thresholds" && !(c.domain.is_grid() && c.domain.side() == c.cls.side)) {
    throw ConfigError("field 'domain': thresholds need a uniform_grid domain with m = class.side");
  }
  ExperimentReport report;
  report.kind = to_string(c.kind);
  report.config = to_json(c);
  json per_setting = json::array();
  PlotSeries regret_plot{"regret_vs_sigma", "sigma", "mean regret", {}, {}, {}};
  PlotSeries bound_plot{"bound_vs_sigma", "sigma", "regret bound", {}, {}, {}};

  std::vector<double> eps_sq;
  for (double e : c.eps_grid) eps_sq.push_back(e * e);
  const covering::ComplexityGrid grid{
      c.complexity_n_grid,
      {adversaries::ProcessSpec::base(), adversaries::ProcessSpec::sliding_window()},
      c.complexity_trials};

  for (std::size_t horizon : c.horizons) {
    // Bound values per sigma, for the monotonicity flag.
    std::vector<std::pair<double, double>> bounds;
    for (std::size_t si = 0; si < c.sigmas.size(); ++si) {
      const double sigma = c.sigmas[si];
      Rng class_rng(c.seed, kExpertStream);
      const auto members = class_members(c, horizon, class_rng);
      Rng est_rng(c.seed, 32 + si);
      const auto estimates =
          covering::estimate_complexity_C(covering::fixed_class(members), c.domain, sigma, eps_sq, grid, est_rng);
      std::vector<double> cs;
      for (const auto& e : estimates) cs.push_back(e.value);
      const auto bound = covering::eval_regret_bound(horizon, sigma, c.eps_grid, cs);
      bounds.emplace_back(sigma, bound.value);

      // Cover under d_mu: exact on a grid, a 4096-point empirical proxy on [0,1).
      covering::FiniteMetricView view;
      if (c.domain.is_grid()) {
        view = covering::base_measure_view(members, c.domain);
      } else {
        Rng proxy_rng(c.seed, 48 + si);
        std::vector<Instance> proxy;
        for (int k = 0; k < 4096; ++k) proxy.push_back(c.domain.sample(proxy_rng));
        view = covering::empirical_view(members, proxy);
      }
      std::vector<Hypothesis> cover;
      for (auto i : covering::greedy_cover(view, bound.argmin_eps)) cover.push_back(members[i]);

      ExperimentConfig run = c;
      run.sigma = sigma;
      std::vector<RegretReport> reports(c.trials);
      parallel_for(c.trials, c.threads, [&](std::size_t i) {
        const auto seed = c.trial_seed(i);
        Rng adv(seed, kAdversaryStream);
        const auto& target = members[adv.uniform_below(members.size())];
        const auto process = adversaries::make_smooth_process(c.adversary.process, sigma, c.domain, horizon);
        const auto bundle = adversaries::realizable_smooth_stream(target, process, adv);
        auto learner = learners::cover_learner(cover, horizon);
        Rng rng(seed, kLearnerStream);
        auto r = run_game(bundle.stream, *learner, rng);
        r.comparator_loss = comparator_loss(bundle.stream, RealizabilityWitness{target});
        reports[i] = std::move(r);
      });
      std::vector<double> regrets;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        regrets.push_back(static_cast<double>(reports[i].regret()));
        report.records.push_back({{"T", horizon},
                                  {"sigma", sigma},
                                  {"trial", i},
                                  {"seed", c.trial_seed(i)},
                                  {"learner_loss", reports[i].learner_loss},
                                  {"comparator_loss", *reports[i].comparator_loss},
                                  {"regret", reports[i].regret()},
                                  {"cover_size", cover.size()}});
      }
      const auto rs = summarize(regrets);
      json est = json::array();
      for (const auto& e : estimates) est.push_back(covering::to_json(e));
      per_setting.push_back({{"T", horizon},
                             {"sigma", sigma},
                             {"class_size", members.size()},
                             {"complexity", std::move(est)},
                             {"bound", covering::to_json(bound)},
                             {"cover_eps", bound.argmin_eps},
                             {"cover_size", cover.size()},
                             {"mean_regret", rs.mean},
                             {"regret_se", rs.std_error}});
      const std::string at = " (T=" + std::to_string(horizon) + ", sigma=" + fmt(sigma) + ")";
      report.flags.push_back(at_most("sufficiency-bound" + at, "mean regret <= min_eps 6(eps T/sigma + sqrt(T ln C))",
                                     rs.mean, bound.value, "SE " + fmt(rs.std_error)));
      if (fam == "rational_indicators") {
        double worst = 0.0;
        for (double v : cs) worst = std::max(worst, v);
        Flag f{"unit-complexity" + at, "complexity estimate equals 1 at every scale", worst, 1.0, "==", worst == 1.0,
               ""};
        report.flags.push_back(f);
      }
      regret_plot.x.push_back(sigma);
      regret_plot.y.push_back(rs.mean);
      regret_plot.band.push_back(rs.std_error);
      bound_plot.x.push_back(sigma);
      bound_plot.y.push_back(bound.value);
      bound_plot.band.push_back(0.0);
    }
    std::sort(bounds.begin(), bounds.end());
    bool monotone = true;
    for (std::size_t i = 1; i < bounds.size(); ++i) monotone = monotone && bounds[i - 1].second >= bounds[i].second;
    if (bounds.size() > 1) {
      report.flags.push_back({"bound-monotone-in-sigma (T=" + std::to_string(horizon) + ")",
                              "the regret bound does not decrease as sigma shrinks", monotone ? 1.0 : 0.0, 1.0, "==",
                              monotone, ""});
    }
  }
  report.results["settings"] = std::move(per_setting);
  report.plots = {regret_plot, bound_plot};
  report.seconds = seconds_since(t0);
  return report;
}

ExperimentReport run_entropy_suite(const ExperimentConfig& c) {
  const auto t0 = Clock::now();
  ExperimentReport report;
  report.kind = to_string(c.kind);
  report.config = to_json(c);
  const covering::LemmaShape shape;
  using Check = covering::LemmaCheck (*)(Rng&, std::size_t, const covering::LemmaShape&);
  const Check checks[] = {covering::check_covering_packing_duality, covering::check_symmetric_difference_cover,
                          covering::check_discretization_bound,     covering::check_haussler_bound,
                          covering::check_loss_class_cover,         covering::check_metric_entropy_from_empirical};
  constexpr std::size_t kChecks = std::size(checks);
  std::vector<covering::LemmaCheck> results(kChecks);
  parallel_for(kChecks, c.threads, [&](std::size_t k) {
    Rng rng(c.seed, 64 + k);
    results[k] = checks[k](rng, c.lemma_instances, shape);
  });
  json lemmas = json::array();
  for (const auto& r : results) {
    lemmas.push_back(covering::to_json(r));
    report.records.push_back({{"check", r.name},
                              {"instances", r.instances},
                              {"comparisons", r.comparisons},
                              {"violations", r.violations}});
    Flag f = at_most(r.name, r.claim + " on every instance", static_cast<double>(r.violations), 0.0,
                     std::to_string(r.instances) + " instances, " + std::to_string(r.comparisons) + " comparisons");
    if (r.instances < c.lemma_instances) f.passed = false;
    report.flags.push_back(std::move(f));
  }
  report.results["lemmas"] = std::move(lemmas);
  report.results["eps_grid"] = shape.eps_grid;

  // Rational indicators: every finite point set of non-dyadic rationals is
  // shattered, while draws from the base measure never hit a support point.
  {
    Rng rng(c.seed, 96);
    std::size_t worst_gap = 0;
    std::size_t tests = 0;
    for (std::size_t k = 1; k <= 10; ++k) {
      for (int rep = 0; rep < 10; ++rep) {
        std::vector<classes::Rational> pts;
        while (pts.size() < k) {
          const auto den = static_cast<std::int64_t>(3 * rng.uniform_between(1, 500));
          auto q = classes::make_rational(static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(den))) * 3 + 1, den * 3);
          if (!classes::is_dyadic(q) && std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
        }
        covering::LabelTable t;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
          std::vector<classes::Rational> support;
          for (std::size_t b = 0; b < k; ++b) {
            if (mask >> b & 1u) support.push_back(pts[b]);
          }
          const auto h = classes::IndicatorHypothesis::over_rationals(support);
          std::vector<std::uint32_t> row;
          for (const auto& q : pts) row.push_back(h.contains(q) ? 1u : 0u);
          t.rows.push_back(std::move(row));
        }
        const auto vc = covering::vc_dimension(t);
        worst_gap = std::max(worst_gap, k - std::min(k, vc));
        ++tests;
      }
    }
    report.flags.push_back(at_most("rational-indicator-shattering",
                                   "every tested set of k <= 10 rationals is shattered (VC >= 10)",
                                   static_cast<double>(worst_gap), 0.0, std::to_string(tests) + " point sets"));
    report.results["rational_shattering_tests"] = tests;

    ExperimentConfig rc = c;
    rc.cls.family = "rational_indicators";
    rc.domain = BaseMeasure::uniform_unit();
    const covering::ComplexityGrid grid{
        c.complexity_n_grid,
        {adversaries::ProcessSpec::base(), adversaries::ProcessSpec::sliding_window()},
        c.complexity_trials};
    double worst = 0.0;
    std::size_t cells = 0;
    json estimates = json::array();
    for (std::size_t si = 0; si < c.sigmas.size(); ++si) {
      Rng member_rng(c.seed, 97 + si);
      const auto members = class_members(rc, 1, member_rng);
      const auto est = covering::estimate_complexity_C(covering::fixed_class(members), rc.domain, c.sigmas[si],
                                                       c.eps_grid, grid, rng);
      for (const auto& e : est) {
        for (const auto& cell : e.cells) {
          worst = std::max(worst, static_cast<double>(cell.max_seen));
          ++cells;
        }
        auto j = covering::to_json(e);
        j["sigma"] = c.sigmas[si];
        estimates.push_back(std::move(j));
      }
    }
    Flag f{"rational-indicator-complexity", "empirical covering number is exactly 1 at every (eps, sigma, n) tested",
           worst, 1.0, "==", worst == 1.0, std::to_string(cells) + " cells"};
    report.flags.push_back(f);
    report.results["rational_complexity"] = std::move(estimates);
  }
  report.seconds = seconds_since(t0);
  return report;
}

ExperimentReport run_compression_check(const ExperimentConfig& c) {
  const auto t0 = Clock::now();
  ExperimentReport report;
  report.kind = to_string(c.kind);
  report.config = to_json(c);
  const auto v = compression::verify_random_samples(c.trials, c.seed);
  report.results = {{"samples", v.samples},
                    {"points", v.points},
                    {"disagreements", v.disagreements},
                    {"invalid_kept", v.invalid_kept}};
  report.records.push_back(report.results);
  report.flags.push_back(at_most("compression-round-trip", "rho(kappa(S)) agrees with S on every point",
                                 static_cast<double>(v.disagreements + v.invalid_kept), 0.0,
                                 std::to_string(v.samples) + " samples, " + std::to_string(v.points) + " points"));
  report.seconds = seconds_since(t0);
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& c, std::vector<TrialBundle>* bundles) {
  switch (c.kind) {
    case ExperimentKind::Regret: return run_regret_experiment(c, bundles);
    case ExperimentKind::PacCurve: return run_pac_curve(c);
    case ExperimentKind::Sufficiency: return run_sufficiency_experiment(c);
    case ExperimentKind::EntropySuite: return run_entropy_suite(c);
    case ExperimentKind::Compression: return run_compression_check(c);
  }
  throw ConfigError("field 'kind': unsupported experiment kind");
}

}  // namespace smoothlab::harness
