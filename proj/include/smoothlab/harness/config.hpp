#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "smoothlab/adversaries/adversaries.hpp"
#include "smoothlab/core/measure.hpp"

namespace smoothlab::harness {

enum class ExperimentKind { Regret, PacCurve, Sufficiency, EntropySuite, Compression };

std::string to_string(ExperimentKind kind);

// All defaults live here. A config document only names what it changes.
//
//   trials                  200
//   delta                   0.05
//   eps_grid                2^-1, 2^-2, ..., 2^-8
//   seed                    1
//   T                       256
//   sigma                   1
//   sigmas (sufficiency)    {1, 0.5}
//   n_grid (pac_curve)      {32, 128, 512, 2048, 4096}
//   seeds_per_stream        1
//   holdout                 2000 draws from the continuous part of the source
//   complexity.n_grid       {16, 64, 256}
//   complexity.trials       10
//   lemma_instances         100
//   threads                 0 (one per hardware thread)
//   class                   thresholds on an 8 x 8 grid; constants count 32;
//                           64 experts; target sequence length 64
//   thresholds              lower_fraction 0.45, grid_fraction 0.9,
//                           coinflip_band [0.40, 0.60], se_allowance 3
struct Defaults {
  static constexpr std::size_t trials = 200;
  static constexpr double delta = 0.05;
  static std::vector<double> eps_grid();
  static constexpr std::uint64_t seed = 1;
  static constexpr std::size_t horizon = 256;
  static constexpr double sigma = 1.0;
  static std::vector<double> sigmas() { return {1.0, 0.5}; }
  static std::vector<std::size_t> n_grid() { return {32, 128, 512, 2048, 4096}; }
  static constexpr std::size_t seeds_per_stream = 1;
  static constexpr std::size_t holdout = 2000;
  static std::vector<std::size_t> complexity_n_grid() { return {16, 64, 256}; }
  static constexpr std::size_t complexity_trials = 10;
  static constexpr std::size_t lemma_instances = 100;
};

struct ClassSpec {
  // separation | thresholds | constants | indicators | rational_indicators
  std::string family = "thresholds";
  std::uint32_t side = 8;          // thresholds: grid side
  std::size_t count = 32;          // constants: values 1..count
  std::size_t experts = 64;        // separation / indicators: finite expert pool
  std::size_t sequence_length = 64;  // pac_curve: target sequence length
};

struct AdversarySpec {
  // separation | coinflip | realizable | random_labels | alternating | switching | noisy
  std::string kind = "realizable";
  adversaries::ProcessSpec process = adversaries::ProcessSpec::base();
  double noise = 0.1;
};

struct LearnerSpec {
  // prefix_guess | random_guess | cover_rewa | memorize_constant
  std::string kind = "cover_rewa";
};

struct FlagThresholds {
  double lower_fraction = 0.45;  // separation: mean regret >= lower_fraction * T
  double grid_fraction = 0.9;    // grid separation: mean regret >= grid_fraction * m / 8
  double coinflip_low = 0.40;
  double coinflip_high = 0.60;
  double se_allowance = 3.0;     // standard errors granted where a flag allows slack
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Regret;
  std::uint64_t seed = Defaults::seed;
  std::size_t trials = Defaults::trials;
  std::vector<std::size_t> horizons{Defaults::horizon};
  double sigma = Defaults::sigma;
  std::vector<double> sigmas = Defaults::sigmas();
  double delta = Defaults::delta;
  std::vector<double> eps_grid = Defaults::eps_grid();
  std::vector<std::size_t> n_grid = Defaults::n_grid();
  BaseMeasure domain = BaseMeasure::uniform_unit();
  ClassSpec cls;
  AdversarySpec adversary;
  LearnerSpec learner;
  std::size_t seeds_per_stream = Defaults::seeds_per_stream;
  std::size_t holdout = Defaults::holdout;
  std::vector<std::size_t> complexity_n_grid = Defaults::complexity_n_grid();
  std::size_t complexity_trials = Defaults::complexity_trials;
  std::size_t lemma_instances = Defaults::lemma_instances;
  std::size_t threads = 0;
  std::size_t dump_bundles = 0;  // regret: serialize the first N trials for replay
  FlagThresholds thresholds;

  // Seed of trial i: base seed + i.
  std::uint64_t trial_seed(std::size_t trial) const { return seed + trial; }
};

// ConfigError naming the offending field on malformed or invalid input.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
// Fully resolved form; parse_config(to_json(c)) reproduces c.
nlohmann::json to_json(const ExperimentConfig& config);

}  // namespace smoothlab::harness
