#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "smoothlab/classes/hypothesis.hpp"
#include "smoothlab/core/game.hpp"
#include "smoothlab/core/rng.hpp"

namespace smoothlab::learners {

// Randomized exponential weights over a finite expert set. Weights live in
// log domain; a linear copy rescaled to the current maximum is kept for
// sampling and refreshed from the logs whenever it underflows.
struct RewaState {
  std::vector<classes::Hypothesis> experts;
  std::vector<double> log_weights;
  double eta = 0.0;
  std::size_t horizon = 0;
  std::size_t round = 0;
  bool awaiting_update = false;

  std::vector<double> scaled;  // exp(log_weight - anchor)
  double scaled_sum = 0.0;
  double anchor = 0.0;
  double decay = 1.0;  // exp(-eta)
};

// eta = sqrt(8 ln N / T); 0 when N = 1 or T = 0.
double rewa_eta(std::size_t experts, std::size_t horizon);
// sqrt(2 T ln N).
double rewa_regret_bound(std::size_t experts, std::size_t horizon);

// PreconditionError on an empty expert set or a negative/non-finite eta.
RewaState make_rewa_state(std::vector<classes::Hypothesis> experts, double eta, std::size_t horizon);

std::vector<double> selection_probabilities(const RewaState& state);
// Index of the expert drawn for this round.
std::size_t rewa_sample(const RewaState& state, Rng& rng);
// Draws an expert and returns its label at x. ProtocolError when the
// previous prediction has not been followed by an update.
Label rewa_predict(RewaState& state, const Instance& x, Rng& rng);
// Charges every expert that mislabels x. ProtocolError without a pending
// prediction.
void rewa_update(RewaState& state, const Instance& x, const Label& y);
// Probability that the next prediction at x differs from y.
double rewa_expected_loss(const RewaState& state, const Instance& x, const Label& y);

// Expected cumulative loss of REWA on a fixed stream. The weights do not
// depend on the sampled experts, so this is exact.
double rewa_expected_cumulative_loss(std::vector<classes::Hypothesis> experts, double eta,
                                     const LabeledStream& stream);

class RewaLearner : public Learner {
 public:
  RewaLearner(std::vector<classes::Hypothesis> experts, double eta, std::string name = "rewa");

  std::string name() const override { return name_; }
  void start(std::size_t horizon) override;
  Label predict(const Instance& x, const RoundContext& ctx, Rng& rng) override;
  void observe(const Instance& x, const Label& y) override;
  bool accepts(const Label& y) const override;

  const RewaState& state() const { return state_; }
  std::size_t expert_count() const { return experts_.size(); }
  const std::vector<classes::Hypothesis>& experts() const { return experts_; }
  double eta() const { return eta_; }

 private:
  std::vector<classes::Hypothesis> experts_;
  double eta_;
  std::string name_;
  RewaState state_;
  std::vector<Label::Kind> kinds_;
};

// REWA over a cover with the step size tuned for horizon T.
std::unique_ptr<RewaLearner> cover_learner(std::vector<classes::Hypothesis> cover, std::size_t horizon);

// Predicts a uniformly random member of a fixed label pool.
class RandomGuessLearner : public Learner {
 public:
  explicit RandomGuessLearner(std::vector<Label> pool);

  std::string name() const override { return "random_guess"; }
  void start(std::size_t) override {}
  Label predict(const Instance& x, const RoundContext& ctx, Rng& rng) override;
  void observe(const Instance&, const Label&) override {}
  bool accepts(const Label& y) const override;

 private:
  std::vector<Label> pool_;
};

// Separation-class guesser: once a label reveals the sequence it answers
// (seq, star) off the sequence, copies the revealed prefix of theta, and
// fills the still-unknown bits with fair coins.
class PrefixGuessLearner : public Learner {
 public:
  std::string name() const override { return "prefix_guess"; }
  void start(std::size_t) override;
  Label predict(const Instance& x, const RoundContext& ctx, Rng& rng) override;
  void observe(const Instance& x, const Label& y) override;
  bool accepts(const Label& y) const override { return y.is_anchored(); }

 private:
  SequencePtr seq_;
  BitString known_;
};

// Predicts Nat(0) until the first label arrives, then repeats it.
class MemorizeConstantLearner : public Learner {
 public:
  std::string name() const override { return "memorize_constant"; }
  void start(std::size_t) override { seen_.reset(); }
  Label predict(const Instance& x, const RoundContext& ctx, Rng& rng) override;
  void observe(const Instance& x, const Label& y) override;
  bool accepts(const Label& y) const override { return y.kind() == Label::Kind::Nat; }

 private:
  std::optional<Label> seen_;
};

}  // namespace smoothlab::learners
