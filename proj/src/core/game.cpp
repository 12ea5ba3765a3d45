#include "smoothlab/core/game.hpp"

#include <algorithm>
#include <limits>

#include "smoothlab/core/errors.hpp"

namespace smoothlab {

std::vector<Instance> LabeledStream::instances() const {
  std::vector<Instance> xs;
  xs.reserve(pairs.size());
  for (const auto& p : pairs) xs.push_back(p.x);
  return xs;
}

const Label& RoundContext::label(std::size_t s) const {
  if (s >= round_) {
    throw ProtocolError("label of round " + std::to_string(s) + " requested while predicting round " +
                        std::to_string(round_));
  }
  return revealed_[s].y;
}

std::int64_t RegretReport::regret() const {
  if (!comparator_loss) throw ProtocolError("regret requested before the comparator loss was set");
  return learner_loss - *comparator_loss;
}

RegretReport run_game(const LabeledStream& stream, Learner& learner, Rng& rng) {
  const std::size_t horizon = stream.horizon();
  RegretReport report;
  report.seed = rng.seed();
  report.horizon = horizon;
  report.per_round_losses.reserve(horizon);

  // The learner only ever sees this copy, which grows one round at a time.
  std::vector<LabeledPair> history;
  history.reserve(horizon);

  learner.start(horizon);
  for (std::size_t t = 0; t < horizon; ++t) {
    const auto& [x, y] = stream.pairs[t];
    const RoundContext ctx(t, history);
    Label prediction = learner.predict(x, ctx, rng);
    if (!learner.accepts(prediction)) {
      throw ProtocolError(learner.name() + " predicted " + prediction.canonical() +
                          " outside its declared label domain at round " + std::to_string(t));
    }
    const std::uint8_t loss = prediction == y ? 0 : 1;
    report.per_round_losses.push_back(loss);
    report.learner_loss += loss;
    history.push_back(stream.pairs[t]);
    learner.observe(x, y);
  }
  return report;
}

std::int64_t cumulative_loss(const LabeledStream& stream, const classes::Hypothesis& h) {
  std::int64_t loss = 0;
  for (const auto& [x, y] : stream.pairs) loss += h(x) == y ? 0 : 1;
  return loss;
}

std::int64_t comparator_loss(const LabeledStream& stream, const Comparator& comparator) {
  if (const auto* w = std::get_if<RealizabilityWitness>(&comparator)) {
    for (std::size_t t = 0; t < stream.pairs.size(); ++t) {
      const auto& [x, y] = stream.pairs[t];
      if (!(w->witness(x) == y)) {
        throw WitnessError("witness " + w->witness.describe() + " mislabels round " + std::to_string(t));
      }
    }
    return 0;
  }
  const auto& set = std::get<ExhaustiveOverFiniteSet>(comparator).hypotheses;
  if (set.empty()) throw PreconditionError("comparator set is empty");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& h : set) best = std::min(best, cumulative_loss(stream, h));
  return best;
}

}  // namespace smoothlab
