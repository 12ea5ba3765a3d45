#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smoothlab/adversaries/adversaries.hpp"
#include "smoothlab/core/game.hpp"
#include "smoothlab/harness/config.hpp"
#include "smoothlab/harness/report.hpp"

namespace smoothlab::harness {

// Runs body(0..n-1) on up to `threads` workers (0 = hardware concurrency).
// Callers write results into slots indexed by i, so reductions stay ordered.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body);

// Everything needed to re-run one regret trial without the generator.
struct TrialBundle {
  nlohmann::json config;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t horizon = 0;
  adversaries::StreamBundle bundle;
  RegretReport report;  // first learner run, comparator filled in
};

nlohmann::json to_json(const TrialBundle& b);
TrialBundle trial_bundle_from_json(const nlohmann::json& j);

// Per trial: build the bundle, play seeds_per_stream learner runs, compute
// the comparator loss, record regret. Flags depend on the adversary and
// learner. When `bundles` is given, the first config.dump_bundles trials of
// each horizon are stored there.
ExperimentReport run_regret_experiment(const ExperimentConfig& config, std::vector<TrialBundle>* bundles = nullptr);

// Compression learner on samples from a realizable separation source; the
// holdout error against pac_error_bound(n, 1, delta) at every n.
ExperimentReport run_pac_curve(const ExperimentConfig& config);

// Complexity estimate over the eps^2 grid, regret bound, cover learner on
// certified smooth realizable streams, for every sigma in config.sigmas.
ExperimentReport run_sufficiency_experiment(const ExperimentConfig& config);

// Brute-force metric-entropy checks and the rational-indicator example.
ExperimentReport run_entropy_suite(const ExperimentConfig& config);

// kappa/rho round trips on config.trials random realizable samples.
ExperimentReport run_compression_check(const ExperimentConfig& config);

ExperimentReport run_experiment(const ExperimentConfig& config, std::vector<TrialBundle>* bundles = nullptr);

struct ReplayResult {
  bool identical = false;
  RegretReport original;
  RegretReport replayed;
  std::string difference;
};

// Rebuilds the learner from the stored config and seed, replays the stored
// stream and compares the report field by field.
ReplayResult replay(const TrialBundle& bundle);

}  // namespace smoothlab::harness
