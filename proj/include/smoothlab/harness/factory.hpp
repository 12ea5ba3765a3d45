#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "smoothlab/adversaries/adversaries.hpp"
#include "smoothlab/classes/hypothesis.hpp"
#include "smoothlab/core/game.hpp"
#include "smoothlab/harness/config.hpp"

// Builds classes, learners, streams and comparators from a config. Every
// random choice is drawn from a stream of Rng(trial_seed, k):
//   k = 0  adversary (instances, labels, targets)
//   k = 1  learner predictions
//   k = 2  randomized expert pools
namespace smoothlab::harness {

inline constexpr std::uint64_t kAdversaryStream = 0;
inline constexpr std::uint64_t kLearnerStream = 1;
inline constexpr std::uint64_t kExpertStream = 2;

// ConfigError when the class, adversary, learner and domain do not fit together.
void validate_pairing(const ExperimentConfig& config);

// Finite family standing in for the class. thresholds and constants are
// enumerated exactly; separation draws `experts` hypotheses over sequences of
// T fresh domain points; indicators are the zero function plus single-point
// indicators on fresh domain points; rational_indicators use random
// non-dyadic rational supports.
std::vector<classes::Hypothesis> class_members(const ExperimentConfig& config, std::size_t horizon, Rng& rng);

// Whether class_members uses its rng.
bool randomized_members(const ClassSpec& cls);

// Labels a random guesser picks from; ConfigError for separation.
std::vector<Label> label_pool(const ClassSpec& cls);

std::unique_ptr<Learner> make_learner(const ExperimentConfig& config, std::size_t horizon, std::uint64_t trial_seed);

adversaries::StreamBundle make_bundle(const ExperimentConfig& config, std::size_t horizon, Rng& rng);

// The bundle's witness when it has one, else the whole finite family.
Comparator make_comparator(const ExperimentConfig& config, const adversaries::StreamBundle& bundle,
                           std::size_t horizon, std::uint64_t trial_seed);

}  // namespace smoothlab::harness
