#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "smoothlab/classes/hypothesis.hpp"
#include "smoothlab/core/instance.hpp"
#include "smoothlab/core/label.hpp"
#include "smoothlab/core/rng.hpp"

namespace smoothlab {

struct LabeledPair {
  Instance x;
  Label y;

  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

// The oblivious adversary's stream (x_1, y_1), ..., (x_T, y_T).
struct LabeledStream {
  std::vector<LabeledPair> pairs;

  std::size_t horizon() const { return pairs.size(); }
  std::vector<Instance> instances() const;

  friend bool operator==(const LabeledStream&, const LabeledStream&) = default;
};

// What a learner may see while predicting round t: x_t itself is passed
// separately, and only labels of rounds before t can be read.
class RoundContext {
 public:
  RoundContext(std::size_t round, std::span<const LabeledPair> revealed)
      : round_(round), revealed_(revealed) {}

  // 0-based index of the round being predicted.
  std::size_t round() const { return round_; }
  std::span<const LabeledPair> revealed() const { return revealed_; }

  // Label of round s; throws ProtocolError for s >= round().
  const Label& label(std::size_t s) const;

 private:
  std::size_t round_;
  std::span<const LabeledPair> revealed_;
};

class Learner {
 public:
  virtual ~Learner() = default;

  virtual std::string name() const = 0;
  // Called once before round 0 with the horizon T.
  virtual void start(std::size_t horizon) = 0;
  virtual Label predict(const Instance& x, const RoundContext& ctx, Rng& rng) = 0;
  // Delivered strictly after the prediction for the same round.
  virtual void observe(const Instance& x, const Label& y) = 0;
  // The learner's declared label domain.
  virtual bool accepts(const Label& y) const = 0;
};

struct RegretReport {
  std::uint64_t seed = 0;
  std::size_t horizon = 0;
  std::int64_t learner_loss = 0;
  std::optional<std::int64_t> comparator_loss;
  std::vector<std::uint8_t> per_round_losses;

  // learner_loss - comparator_loss; throws ProtocolError while the
  // comparator is unset.
  std::int64_t regret() const;

  friend bool operator==(const RegretReport&, const RegretReport&) = default;
};

// Plays the protocol: reveal x_t, take the prediction, then reveal y_t.
// The report's seed is rng.seed(); comparator_loss is left unset.
RegretReport run_game(const LabeledStream& stream, Learner& learner, Rng& rng);

struct ExhaustiveOverFiniteSet {
  std::vector<classes::Hypothesis> hypotheses;
};

struct RealizabilityWitness {
  classes::Hypothesis witness;
};

using Comparator = std::variant<ExhaustiveOverFiniteSet, RealizabilityWitness>;

// min over the comparator set of the cumulative 0-1 loss. A witness must be
// perfect on the stream (WitnessError otherwise); an empty set is a
// PreconditionError.
std::int64_t comparator_loss(const LabeledStream& stream, const Comparator& comparator);

// Cumulative 0-1 loss of one hypothesis on the stream.
std::int64_t cumulative_loss(const LabeledStream& stream, const classes::Hypothesis& h);

}  // namespace smoothlab
