#include "smoothlab/harness/factory.hpp"

#include "smoothlab/core/errors.hpp"
#include "smoothlab/learners/learners.hpp"

namespace smoothlab::harness {

using adversaries::StreamBundle;
using classes::Hypothesis;

namespace {

bool binary_family(const std::string& f) { return f == "thresholds" || f == "indicators" || f == "rational_indicators"; }

std::vector<Instance> fresh_points(const BaseMeasure& mu, std::size_t count, Rng& rng) {
  std::vector<Instance> out;
  while (out.size() < count) {
    const Instance x = mu.sample(rng);
    bool seen = false;
    for (const auto& y : out) seen = seen || y == x;
    if (!seen || (mu.is_grid() && out.size() >= mu.cells())) out.push_back(x);
  }
  return out;
}

// p / 3^k with p not divisible by 3: never dyadic.
classes::Rational random_non_dyadic(Rng& rng) {
  const std::int64_t den = 3 * static_cast<std::int64_t>(rng.uniform_between(1, 1000)) * 3;
  std::int64_t num = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(den)));
  if (num % 3 == 0) num += 1;
  return classes::make_rational(num, den);
}

Label flip(const Label& y, const std::vector<Label>& pool, Rng& rng) {
  if (y.kind() == Label::Kind::Bit) return Label::bit(!y.bit_value());
  for (;;) {
    const Label& z = pool[rng.uniform_below(pool.size())];
    if (z != y || pool.size() == 1) return z;
  }
}

}  // namespace

void validate_pairing(const ExperimentConfig& c) {
  const auto& fam = c.cls.family;
  const auto& adv = c.adversary.kind;
  const auto& lrn = c.learner.kind;
  if (fam == "thresholds" && !(c.domain.is_grid() && c.domain.side() == c.cls.side)) {
    throw ConfigError("field 'domain': thresholds need a uniform_grid domain with m = class.side");
  }
  if (adv == "separation" && fam != "separation") {
    throw ConfigError("field 'adversary.kind': the separation adversary needs class.family = separation");
  }
  if (adv == "coinflip" && (fam != "indicators" || !c.domain.is_unit())) {
    throw ConfigError("field 'adversary.kind': coinflip needs class.family = indicators on the unit domain");
  }
  const bool finite_family = fam == "thresholds" || fam == "constants";
  if ((adv == "random_labels" || adv == "alternating" || adv == "switching" || adv == "noisy") && !finite_family) {
    throw ConfigError("field 'adversary.kind': " + adv + " streams need an enumerable class (thresholds or constants)");
  }
  if (adv == "alternating" && fam != "thresholds") {
    throw ConfigError("field 'adversary.kind': alternating streams need binary thresholds");
  }
  if (lrn == "prefix_guess" && fam != "separation") {
    throw ConfigError("field 'learner.kind': prefix_guess only plays separation streams");
  }
  if (lrn == "random_guess" && fam == "separation") {
    throw ConfigError("field 'learner.kind': random_guess needs a finite label pool; use prefix_guess");
  }
  if (lrn == "memorize_constant" && fam != "constants") {
    throw ConfigError("field 'learner.kind': memorize_constant only plays constant streams");
  }
}

bool randomized_members(const ClassSpec& cls) { return cls.family != "thresholds" && cls.family != "constants"; }

std::vector<Hypothesis> class_members(const ExperimentConfig& c, std::size_t horizon, Rng& rng) {
  const auto& fam = c.cls.family;
  if (fam == "thresholds") return classes::grid_thresholds(c.cls.side);
  if (fam == "constants") return classes::constants(c.cls.count);
  std::vector<Hypothesis> out;
  if (fam == "separation") {
    const std::size_t len = std::max<std::size_t>(horizon, 1);
    for (std::size_t e = 0; e < c.cls.experts; ++e) {
      BitString theta(len);
      for (std::size_t i = 0; i < len; ++i) theta[i] = rng.coin();
      const auto pts =
          c.domain.is_grid() ? fresh_points(c.domain, std::min<std::size_t>(len, c.domain.cells()), rng)
                             : fresh_points(c.domain, len, rng);
      theta.resize(pts.size());
      out.emplace_back(classes::SeparationHypothesis(make_sequence(pts), std::move(theta)));
    }
    return out;
  }
  if (fam == "indicators") {
    out.emplace_back(classes::IndicatorHypothesis::over_instances({}));
    for (std::size_t e = 1; e < c.cls.experts; ++e) {
      out.emplace_back(classes::IndicatorHypothesis::over_instances({c.domain.sample(rng)}));
    }
    return out;
  }
  // rational_indicators
  for (std::size_t e = 0; e < c.cls.experts; ++e) {
    std::vector<classes::Rational> support;
    const auto size = rng.uniform_between(0, 8);
    for (std::uint64_t k = 0; k < size; ++k) support.push_back(random_non_dyadic(rng));
    out.emplace_back(classes::IndicatorHypothesis::over_rationals(std::move(support)));
  }
  return out;
}

std::vector<Label> label_pool(const ClassSpec& cls) {
  if (binary_family(cls.family)) return {Label::bit(false), Label::bit(true)};
  if (cls.family == "constants") {
    std::vector<Label> pool;
    for (std::uint64_t v = 1; v <= cls.count; ++v) pool.push_back(Label::nat(v));
    return pool;
  }
  throw ConfigError("field 'class.family': separation labels have no finite guessing pool");
}

std::unique_ptr<Learner> make_learner(const ExperimentConfig& c, std::size_t horizon, std::uint64_t trial_seed) {
  const auto& kind = c.learner.kind;
  if (kind == "prefix_guess") return std::make_unique<learners::PrefixGuessLearner>();
  if (kind == "random_guess") return std::make_unique<learners::RandomGuessLearner>(label_pool(c.cls));
  if (kind == "memorize_constant") return std::make_unique<learners::MemorizeConstantLearner>();
  Rng rng(trial_seed, kExpertStream);
  return learners::cover_learner(class_members(c, horizon, rng), horizon);
}

StreamBundle make_bundle(const ExperimentConfig& c, std::size_t horizon, Rng& rng) {
  const auto& kind = c.adversary.kind;
  if (kind == "separation") return adversaries::separation_stream(horizon, c.domain, rng);
  if (kind == "coinflip") return adversaries::coinflip_stream(horizon, rng);

  const auto process = adversaries::make_smooth_process(c.adversary.process, c.sigma, c.domain, horizon);
  if (kind == "realizable") {
    auto members = class_members(c, horizon, rng);
    const auto& target = members[rng.uniform_below(members.size())];
    return adversaries::realizable_smooth_stream(target, process, rng);
  }

  const auto members = class_members(c, horizon, rng);
  const auto pool = label_pool(c.cls);
  const auto xs = process.sample(rng);
  LabeledStream stream;
  stream.pairs.reserve(horizon);
  if (kind == "random_labels") {
    for (const auto& x : xs) stream.pairs.push_back({x, pool[rng.uniform_below(pool.size())]});
  } else if (kind == "alternating") {
    const bool start = rng.coin();
    for (std::size_t t = 0; t < xs.size(); ++t) stream.pairs.push_back({xs[t], Label::bit(start != (t % 2 == 1))});
  } else if (kind == "switching") {
    const auto& a = members[rng.uniform_below(members.size())];
    const auto& b = members[rng.uniform_below(members.size())];
    for (std::size_t t = 0; t < xs.size(); ++t) stream.pairs.push_back({xs[t], (2 * t < xs.size() ? a : b)(xs[t])});
  } else if (kind == "noisy") {
    const auto& target = members[rng.uniform_below(members.size())];
    for (const auto& x : xs) {
      Label y = target(x);
      if (rng.uniform01() < c.adversary.noise) y = flip(y, pool, rng);
      stream.pairs.push_back({x, std::move(y)});
    }
  } else {
    throw ConfigError("field 'adversary.kind': unknown value '" + kind + "'");
  }
  return {std::move(stream), std::nullopt, process, true, 0};
}

Comparator make_comparator(const ExperimentConfig& c, const StreamBundle& bundle, std::size_t horizon,
                           std::uint64_t trial_seed) {
  if (bundle.witness) return RealizabilityWitness{*bundle.witness};
  Rng rng(trial_seed, kExpertStream);
  return ExhaustiveOverFiniteSet{class_members(c, horizon, rng)};
}

}  // namespace smoothlab::harness
