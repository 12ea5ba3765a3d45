#include "smoothlab/learners/learners.hpp"

#include <algorithm>
#include <cmath>

#include "smoothlab/core/errors.hpp"

namespace smoothlab::learners {

using classes::Hypothesis;

namespace {

// Below this the linear weights are rebuilt from the log weights.
constexpr double kRescaleFloor = 1e-150;

void rescale(RewaState& s) {
  s.anchor = *std::max_element(s.log_weights.begin(), s.log_weights.end());
  s.scaled_sum = 0.0;
  for (std::size_t i = 0; i < s.log_weights.size(); ++i) {
    s.scaled[i] = std::exp(s.log_weights[i] - s.anchor);
    s.scaled_sum += s.scaled[i];
  }
}

}  // namespace

double rewa_eta(std::size_t experts, std::size_t horizon) {
  if (experts <= 1 || horizon == 0) return 0.0;
  return std::sqrt(8.0 * std::log(static_cast<double>(experts)) / static_cast<double>(horizon));
}

double rewa_regret_bound(std::size_t experts, std::size_t horizon) {
  if (experts == 0) return 0.0;
  return std::sqrt(2.0 * static_cast<double>(horizon) * std::log(static_cast<double>(experts)));
}

RewaState make_rewa_state(std::vector<Hypothesis> experts, double eta, std::size_t horizon) {
  if (experts.empty()) throw PreconditionError("REWA needs at least one expert");
  if (!(eta >= 0.0) || !std::isfinite(eta)) throw PreconditionError("REWA step size must be finite and >= 0");
  RewaState s;
  s.log_weights.assign(experts.size(), 0.0);
  s.scaled.assign(experts.size(), 1.0);
  s.scaled_sum = static_cast<double>(experts.size());
  s.experts = std::move(experts);
  s.eta = eta;
  s.decay = std::exp(-eta);
  s.horizon = horizon;
  return s;
}

std::vector<double> selection_probabilities(const RewaState& s) {
  std::vector<double> p(s.scaled.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = s.scaled[i] / s.scaled_sum;
  return p;
}

std::size_t rewa_sample(const RewaState& s, Rng& rng) {
  const double target = rng.uniform01() * s.scaled_sum;
  double acc = 0.0;
  for (std::size_t i = 0; i < s.scaled.size(); ++i) {
    acc += s.scaled[i];
    if (target < acc) return i;
  }
  // Rounding left target at the very top: take the last expert with weight.
  for (std::size_t i = s.scaled.size(); i-- > 0;) {
    if (s.scaled[i] > 0.0) return i;
  }
  return 0;
}

Label rewa_predict(RewaState& s, const Instance& x, Rng& rng) {
  if (s.awaiting_update) throw ProtocolError("REWA predicted twice without an update");
  const std::size_t i = rewa_sample(s, rng);
  s.awaiting_update = true;
  return s.experts[i](x);
}

void rewa_update(RewaState& s, const Instance& x, const Label& y) {
  if (!s.awaiting_update) throw ProtocolError("REWA update without a pending prediction");
  s.awaiting_update = false;
  ++s.round;
  if (s.eta == 0.0) return;
  double sum = 0.0;
  for (std::size_t i = 0; i < s.experts.size(); ++i) {
    if (s.experts[i](x) != y) {
      s.log_weights[i] -= s.eta;
      s.scaled[i] *= s.decay;
    }
    sum += s.scaled[i];
  }
  s.scaled_sum = sum;
  if (sum < kRescaleFloor || !(sum > 0.0)) rescale(s);
}

double rewa_expected_loss(const RewaState& s, const Instance& x, const Label& y) {
  double wrong = 0.0;
  for (std::size_t i = 0; i < s.experts.size(); ++i) {
    if (s.experts[i](x) != y) wrong += s.scaled[i];
  }
  return wrong / s.scaled_sum;
}

double rewa_expected_cumulative_loss(std::vector<Hypothesis> experts, double eta, const LabeledStream& stream) {
  auto s = make_rewa_state(std::move(experts), eta, stream.horizon());
  double total = 0.0;
  for (const auto& [x, y] : stream.pairs) {
    total += rewa_expected_loss(s, x, y);
    s.awaiting_update = true;
    rewa_update(s, x, y);
  }
  return total;
}

RewaLearner::RewaLearner(std::vector<Hypothesis> experts, double eta, std::string name)
    : experts_(std::move(experts)), eta_(eta), name_(std::move(name)) {
  state_ = make_rewa_state(experts_, eta_, 0);
  for (const auto& h : experts_) {
    const auto k = classes::label_kind(h.family());
    if (std::find(kinds_.begin(), kinds_.end(), k) == kinds_.end()) kinds_.push_back(k);
  }
}

void RewaLearner::start(std::size_t horizon) { state_ = make_rewa_state(experts_, eta_, horizon); }

Label RewaLearner::predict(const Instance& x, const RoundContext&, Rng& rng) { return rewa_predict(state_, x, rng); }

void RewaLearner::observe(const Instance& x, const Label& y) { rewa_update(state_, x, y); }

bool RewaLearner::accepts(const Label& y) const {
  return std::find(kinds_.begin(), kinds_.end(), y.kind()) != kinds_.end();
}

std::unique_ptr<RewaLearner> cover_learner(std::vector<Hypothesis> cover, std::size_t horizon) {
  const double eta = rewa_eta(cover.size(), horizon);
  return std::make_unique<RewaLearner>(std::move(cover), eta, "cover_rewa");
}

RandomGuessLearner::RandomGuessLearner(std::vector<Label> pool) : pool_(std::move(pool)) {
  if (pool_.empty()) throw PreconditionError("random guess learner needs a non-empty label pool");
}

Label RandomGuessLearner::predict(const Instance&, const RoundContext&, Rng& rng) {
  return pool_[rng.uniform_below(pool_.size())];
}

bool RandomGuessLearner::accepts(const Label& y) const {
  return std::find(pool_.begin(), pool_.end(), y) != pool_.end();
}

void PrefixGuessLearner::start(std::size_t) {
  seq_.reset();
  known_.clear();
}

Label PrefixGuessLearner::predict(const Instance& x, const RoundContext&, Rng& rng) {
  if (!seq_) return Label::anchored_star(make_sequence({x}));
  const auto pos = seq_->position(x);
  if (!pos) return Label::anchored_star(seq_);
  BitString bits(known_.begin(), known_.begin() + static_cast<std::ptrdiff_t>(std::min(*pos, known_.size())));
  while (bits.size() < *pos) bits.push_back(rng.coin());
  return Label::anchored(seq_, std::move(bits));
}

void PrefixGuessLearner::observe(const Instance&, const Label& y) {
  if (!y.is_anchored()) return;
  if (!seq_ || *seq_ != y.sequence()) {
    seq_ = y.sequence_ptr();
    known_.clear();
  }
  if (!y.is_star() && y.prefix().size() > known_.size()) known_ = y.prefix();
}

Label MemorizeConstantLearner::predict(const Instance&, const RoundContext&, Rng&) {
  return seen_ ? *seen_ : Label::nat(0);
}

void MemorizeConstantLearner::observe(const Instance&, const Label& y) {
  if (!seen_) seen_ = y;
}

}  // namespace smoothlab::learners
