#include "smoothlab/adversaries/adversaries.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "smoothlab/core/errors.hpp"
#include "smoothlab/core/json_io.hpp"

namespace smoothlab::adversaries {

using classes::Hypothesis;
using classes::IndicatorHypothesis;
using classes::SeparationHypothesis;

namespace {

constexpr long double kTwo64 = 18446744073709551616.0L;

BitString random_bits(std::size_t n, Rng& rng) {
  BitString bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = rng.coin();
  return bits;
}

// Distinct i.i.d. uniform dyadic points; a collision redraws the whole block.
std::vector<Instance> distinct_unit_draws(std::size_t horizon, Rng& rng, std::size_t& resamples) {
  const auto mu = BaseMeasure::uniform_unit();
  for (;;) {
    std::vector<Instance> xs;
    xs.reserve(horizon);
    for (std::size_t t = 0; t < horizon; ++t) xs.push_back(mu.sample(rng));
    if (all_distinct(xs)) return xs;
    ++resamples;
  }
}

}  // namespace

StreamBundle separation_stream(std::size_t horizon, const BaseMeasure& domain, Rng& rng) {
  if (domain.is_unit()) {
    if (horizon == 0) {
      return {LabeledStream{}, std::nullopt, SmoothProcess::stationary(domain, 1.0, 0), true, 0};
    }
    std::size_t resamples = 0;
    auto xs = distinct_unit_draws(horizon, rng, resamples);
    auto seq = make_sequence(xs);
    SeparationHypothesis h(seq, random_bits(horizon, rng));
    LabeledStream stream;
    stream.pairs.reserve(horizon);
    for (const auto& x : xs) stream.pairs.push_back({x, h(x)});
    return {std::move(stream), Hypothesis(std::move(h)), SmoothProcess::stationary(domain, 1.0, horizon), true,
            resamples};
  }

  const std::size_t m = domain.side();
  if (horizon < m) {
    throw PreconditionError("grid separation stream needs T >= m (T = " + std::to_string(horizon) +
                            ", m = " + std::to_string(m) + ")");
  }
  std::vector<Instance> xs;
  xs.reserve(horizon);
  for (std::size_t t = 0; t < horizon; ++t) xs.push_back(domain.sample(rng));

  std::vector<Instance> items;
  items.reserve(m);
  for (std::size_t t = 0; t < m; ++t) {
    if (std::find(items.begin(), items.end(), xs[t]) == items.end()) items.push_back(xs[t]);
  }
  const bool distinct = items.size() == m;
  for (std::uint64_t cell = 1; items.size() < m; ++cell) {
    const Instance pad = domain.make(cell);
    if (std::find(items.begin(), items.end(), pad) == items.end()) items.push_back(pad);
  }
  SeparationHypothesis h(make_sequence(std::move(items)), random_bits(m, rng));
  LabeledStream stream;
  stream.pairs.reserve(horizon);
  for (const auto& x : xs) stream.pairs.push_back({x, h(x)});
  return {std::move(stream), Hypothesis(std::move(h)), SmoothProcess::stationary(domain, 1.0, horizon), distinct, 0};
}

StreamBundle coinflip_stream(std::size_t horizon, Rng& rng) {
  std::size_t resamples = 0;
  auto xs = distinct_unit_draws(horizon, rng, resamples);
  LabeledStream stream;
  std::vector<Instance> ones;
  stream.pairs.reserve(horizon);
  for (const auto& x : xs) {
    const bool y = rng.coin();
    if (y) ones.push_back(x);
    stream.pairs.push_back({x, Label::bit(y)});
  }
  return {std::move(stream), Hypothesis(IndicatorHypothesis::over_instances(std::move(ones))),
          SmoothProcess::stationary(BaseMeasure::uniform_unit(), 1.0, horizon), true, resamples};
}

StreamBundle realizable_smooth_stream(const Hypothesis& h, const SmoothProcess& process, Rng& rng) {
  LabeledStream stream;
  stream.pairs.reserve(process.size());
  for (const auto& x : process.sample(rng)) stream.pairs.push_back({x, h(x)});
  return {std::move(stream), h, process, true, 0};
}

std::string ProcessSpec::name() const {
  if (kind == Kind::Base) return "base";
  return width_factor == 1.0 ? "sliding_window" : "sliding_window(x" + std::to_string(width_factor) + ")";
}

SmoothProcess make_smooth_process(const ProcessSpec& spec, double sigma, const BaseMeasure& mu, std::size_t horizon) {
  if (!(sigma > 0.0 && sigma <= 1.0)) throw ConfigError("sigma must lie in (0, 1]");
  if (spec.kind == ProcessSpec::Kind::Base) return SmoothProcess::stationary(mu, sigma, horizon);
  if (!(spec.width_factor > 0.0)) throw ConfigError("window width factor must be positive");

  const long double width = std::min<long double>(1.0L, static_cast<long double>(spec.width_factor) * sigma);
  const long double domain_size = mu.is_unit() ? kTwo64 : static_cast<long double>(mu.cells());
  const long double count = std::max(1.0L, std::ceil(width * domain_size));
  std::vector<SmoothDistribution> ds;
  ds.reserve(horizon);
  if (count >= domain_size) {
    ds.assign(horizon, SmoothDistribution::base(mu));
  } else {
    const auto span = static_cast<std::uint64_t>(count);  // < domain size, fits
    const std::uint64_t slack = mu.last_index() - mu.first_index() + 1 - span;
    for (std::size_t t = 0; t < horizon; ++t) {
      const long double frac = horizon > 1 ? static_cast<long double>(t) / static_cast<long double>(horizon - 1) : 0.0L;
      const auto offset = static_cast<std::uint64_t>(std::floor(frac * static_cast<long double>(slack)));
      const std::uint64_t first = mu.first_index() + offset;
      ds.push_back(SmoothDistribution::uniform_range(mu, first, first + span - 1));
    }
  }
  return SmoothProcess(mu, sigma, std::move(ds));
}

nlohmann::json to_json(const StreamBundle& bundle) {
  nlohmann::json j{{"stream", json_io::to_json(bundle.stream)},
                   {"process", json_io::to_json(bundle.process)},
                   {"distinct", bundle.distinct},
                   {"resamples", bundle.resamples}};
  j["witness"] = bundle.witness ? json_io::to_json(*bundle.witness) : nlohmann::json(nullptr);
  return j;
}

StreamBundle bundle_from_json(const nlohmann::json& j) {
  std::optional<Hypothesis> witness;
  if (j.contains("witness") && !j.at("witness").is_null()) witness = json_io::hypothesis_from_json(j.at("witness"));
  return {json_io::stream_from_json(json_io::require(j, "stream")), std::move(witness),
          json_io::process_from_json(json_io::require(j, "process")), j.value("distinct", true),
          j.value("resamples", std::size_t{0})};
}

nlohmann::json to_json(const ProcessSpec& spec) {
  return {{"kind", spec.kind == ProcessSpec::Kind::Base ? "base" : "sliding_window"},
          {"width_factor", spec.width_factor}};
}

ProcessSpec process_spec_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j == "base") return ProcessSpec::base();
    if (j == "sliding_window") return ProcessSpec::sliding_window();
    throw ConfigError("unknown process family '" + j.get<std::string>() + "'");
  }
  const auto kind = j.value("kind", std::string("base"));
  if (kind == "base") return ProcessSpec::base();
  if (kind == "sliding_window") return ProcessSpec::sliding_window(j.value("width_factor", 1.0));
  throw ConfigError("field 'kind': unknown process family '" + kind + "'");
}

}  // namespace smoothlab::adversaries
