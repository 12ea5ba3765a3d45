#include "smoothlab/compression/compression.hpp"

#include <algorithm>
#include <cmath>

#include "smoothlab/core/errors.hpp"

namespace smoothlab::compression {

using classes::SeparationHypothesis;

namespace {

// Common sequence of an all-anchored sample.
const SequencePtr& shared_sequence(std::span<const LabeledPair> sample) {
  if (sample.empty()) throw PreconditionError("compression needs a nonempty sample");
  for (const auto& [x, y] : sample) {
    if (!y.is_anchored()) throw RealizabilityError("label " + y.canonical() + " is not anchored");
  }
  const auto& seq = sample.front().y.sequence_ptr();
  for (const auto& [x, y] : sample) {
    if (y.sequence_ptr() != seq && !(y.sequence() == *seq)) {
      throw RealizabilityError("labels are anchored to different sequences");
    }
  }
  return seq;
}

}  // namespace

bool is_realizable(std::span<const LabeledPair> sample) {
  if (sample.empty()) return true;
  const InstanceSequence* seq = nullptr;
  try {
    seq = shared_sequence(sample).get();
  } catch (const RealizabilityError&) {
    return false;
  }
  const BitString* longest = nullptr;
  for (const auto& [x, y] : sample) {
    const auto position = seq->position(x);
    if (y.is_star()) {
      if (position) return false;
      continue;
    }
    if (!position || *position != y.prefix().size()) return false;
    if (!longest || y.prefix().size() > longest->size()) longest = &y.prefix();
  }
  if (!longest) return true;
  for (const auto& [x, y] : sample) {
    if (y.is_star()) continue;
    if (!std::equal(y.prefix().begin(), y.prefix().end(), longest->begin())) return false;
  }
  return true;
}

LabeledPair compress(std::span<const LabeledPair> sample) {
  shared_sequence(sample);
  std::size_t kept = 0;
  std::size_t best_length = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto& y = sample[i].y;
    if (!y.is_star() && y.prefix().size() > best_length) {
      best_length = y.prefix().size();
      kept = i;
    }
  }
  return sample[kept];
}

SeparationHypothesis reconstruct(const LabeledPair& kept) {
  const auto& y = kept.y;
  if (!y.is_anchored()) throw LabelTypeError("reconstruction needs an anchored label, got " + y.canonical());
  BitString theta(y.sequence().size(), false);
  if (!y.is_star()) std::copy(y.prefix().begin(), y.prefix().end(), theta.begin());
  return SeparationHypothesis(y.sequence_ptr(), std::move(theta));
}

SeparationHypothesis compression_learner(std::span<const LabeledPair> sample) {
  return reconstruct(compress(sample));
}

double pac_error_bound(double n, double k, double delta) {
  if (!(k >= 1.0) || !(k <= n / 2.0)) throw PreconditionError("compression bound needs 1 <= k <= n/2");
  if (!(delta > 0.0 && delta < 1.0)) throw PreconditionError("compression bound needs 0 < delta < 1");
  return 100.0 * std::sqrt((k * std::log(n / k) + k + std::log(1.0 / delta)) / n);
}

GeneratedSample random_realizable_sample(Rng& rng, const SampleShape& shape) {
  // Half of the targets live on the unit interval, half on a 5x5 grid (25
  // cells, enough room for sequences of length <= 20 plus off-sequence points).
  const bool grid = rng.coin();
  const auto mu = grid ? BaseMeasure::uniform_grid(5) : BaseMeasure::uniform_unit();
  const std::size_t max_length = grid ? std::min<std::size_t>(shape.max_sequence_length, 20)
                                      : shape.max_sequence_length;
  const std::size_t length = 1 + rng.uniform_below(max_length);

  std::vector<Instance> items;
  while (items.size() < length) {
    const Instance x = mu.sample(rng);
    if (std::find(items.begin(), items.end(), x) == items.end()) items.push_back(x);
  }
  BitString theta(length);
  for (std::size_t i = 0; i < length; ++i) theta[i] = rng.coin();
  SeparationHypothesis target(make_sequence(std::move(items)), std::move(theta));

  const std::size_t n = 1 + rng.uniform_below(shape.max_sample_size);
  RealizableSample sample;
  sample.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Instance x = mu.sample(rng);
    if (rng.uniform01() < shape.on_sequence_fraction) {
      x = target.sequence()[rng.uniform_below(length)];
    } else {
      while (target.sequence().position(x)) x = mu.sample(rng);
    }
    sample.push_back({x, target(x)});
  }
  return {std::move(target), std::move(sample)};
}

ValidityReport verify_random_samples(std::size_t samples, std::uint64_t seed, const SampleShape& shape) {
  ValidityReport report;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(seed + i);
    const auto generated = random_realizable_sample(rng, shape);
    const auto& s = generated.sample;
    const LabeledPair kept = compress(s);

    const bool member = std::find(s.begin(), s.end(), kept) != s.end();
    const std::size_t kept_length = kept.y.is_star() ? 0 : kept.y.prefix().size();
    const bool maximal = std::all_of(s.begin(), s.end(), [&](const LabeledPair& p) {
      return p.y.is_star() || p.y.prefix().size() <= kept_length;
    });
    if (!member || !maximal) ++report.invalid_kept;

    const auto f = reconstruct(kept);
    for (const auto& [x, y] : s) {
      if (!(f(x) == y)) ++report.disagreements;
    }
    report.points += s.size();
    ++report.samples;
  }
  return report;
}

}  // namespace smoothlab::compression
