#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "smoothlab/classes/hypothesis.hpp"
#include "smoothlab/core/game.hpp"
#include "smoothlab/core/measure.hpp"
#include "smoothlab/core/rng.hpp"

// Size-1 sample compression for the separation classes.
namespace smoothlab::compression {

using RealizableSample = std::vector<LabeledPair>;

// True iff some separation hypothesis labels every pair of the sample:
// all labels anchored to one sequence, star exactly off the sequence, and
// every prefix a prefix of one common bit string, sitting at its own index.
bool is_realizable(std::span<const LabeledPair> sample);

// kappa: the first pair when every payload is star, otherwise the pair with
// the longest prefix payload (earliest on ties).
// Throws PreconditionError on an empty sample and RealizabilityError when
// labels are not all anchored to the same sequence.
LabeledPair compress(std::span<const LabeledPair> sample);

// rho: h^theta over y[1], with theta the payload completed by zeros
// (all zeros for star). Throws LabelTypeError for non-anchored labels.
classes::SeparationHypothesis reconstruct(const LabeledPair& kept);

// f_S = rho(kappa(S)).
classes::SeparationHypothesis compression_learner(std::span<const LabeledPair> sample);

// 100 * sqrt((k ln(n/k) + k + ln(1/delta)) / n), natural logarithms.
// Requires 1 <= k <= n/2 and 0 < delta < 1 (PreconditionError otherwise).
double pac_error_bound(double n, double k, double delta);

struct SampleShape {
  std::size_t max_sample_size = 50;
  std::size_t max_sequence_length = 20;
  // Probability that a sample point is drawn from the target's sequence.
  double on_sequence_fraction = 0.5;
};

struct GeneratedSample {
  classes::SeparationHypothesis target;
  RealizableSample sample;
};

// Random target (random domain, sequence, theta) and a sample it labels.
GeneratedSample random_realizable_sample(Rng& rng, const SampleShape& shape = {});

struct ValidityReport {
  std::size_t samples = 0;
  std::size_t points = 0;
  std::size_t disagreements = 0;  // points where rho(kappa(S)) differs from S
  std::size_t invalid_kept = 0;   // kept pair not in S, or not prefix-maximal

  bool ok() const { return disagreements == 0 && invalid_kept == 0; }
};

// Round-trips `samples` random realizable samples through kappa and rho;
// sample i uses Rng(seed + i).
ValidityReport verify_random_samples(std::size_t samples, std::uint64_t seed, const SampleShape& shape = {});

}  // namespace smoothlab::compression
