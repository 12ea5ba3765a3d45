#pragma once

#include <cstddef>
#include <optional>

#include <json.hpp>

#include "smoothlab/classes/hypothesis.hpp"
#include "smoothlab/core/game.hpp"
#include "smoothlab/core/measure.hpp"
#include "smoothlab/core/rng.hpp"

// Oblivious stream generators. Every bundle is fully materialized before any
// learner runs; generators never see learner state.
namespace smoothlab::adversaries {

struct StreamBundle {
  LabeledStream stream;
  std::optional<classes::Hypothesis> witness;  // loss 0 on the stream when present
  // The process the instances were drawn from.
  SmoothProcess process = SmoothProcess::stationary(BaseMeasure::uniform_unit(), 1.0, 0);
  // Grid separation streams: whether x_1..x_m came out pairwise distinct.
  bool distinct = true;
  // Unit-domain draws rejected because fresh samples collided.
  std::size_t resamples = 0;
};

// Lower-bound stream for the separation class under mu with sigma = 1.
//
// Unit domain: x_1..x_T i.i.d. uniform (redrawn on the never-observed
// collision), theta ~ Uniform({0,1}^T), y_t = ((x_1..x_T), theta_{<=t}).
//
// Grid domain with m^2 cells (requires m <= T): x_1..x_T i.i.d. uniform,
// theta ~ Uniform({0,1}^m), and y_t = h^theta_seq(x_t) for every t. When
// x_1..x_m are distinct, seq = (x_1..x_m), so rounds t <= m carry
// ((x_1..x_m), theta_{<=t}). Otherwise seq lists the distinct values of
// x_1..x_m in order of first appearance, padded with the lowest unused cells,
// and the bundle is flagged non-distinct; its stream stays realizable.
StreamBundle separation_stream(std::size_t horizon, const BaseMeasure& domain, Rng& rng);

// x_t i.i.d. uniform on [0,1), y_t fair coin flips; the witness is the
// indicator of the finite set {x_t : y_t = 1}.
StreamBundle coinflip_stream(std::size_t horizon, Rng& rng);

// x_t ~ nu_t independently, y_t = h(x_t), witness h.
StreamBundle realizable_smooth_stream(const classes::Hypothesis& h, const SmoothProcess& process, Rng& rng);

struct ProcessSpec {
  enum class Kind { Base, SlidingWindow };
  Kind kind = Kind::Base;
  // Window width as a multiple of sigma (fraction of the domain's mass).
  double width_factor = 1.0;

  static ProcessSpec base() { return {Kind::Base, 1.0}; }
  static ProcessSpec sliding_window(double width_factor = 1.0) { return {Kind::SlidingWindow, width_factor}; }

  std::string name() const;
};

// Builds nu_1..nu_T and certifies them; ConfigError on certificate failure.
// A sliding window of width w = width_factor * sigma is uniform over
// ceil(w * |domain|) consecutive indices whose start moves linearly from the
// left edge (t = 1) to the right edge (t = T).
SmoothProcess make_smooth_process(const ProcessSpec& spec, double sigma, const BaseMeasure& mu, std::size_t horizon);

nlohmann::json to_json(const StreamBundle& bundle);
StreamBundle bundle_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ProcessSpec& spec);
ProcessSpec process_spec_from_json(const nlohmann::json& j);

}  // namespace smoothlab::adversaries
