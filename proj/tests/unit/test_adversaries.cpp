#include <doctest.h>

#include <cmath>
#include <set>

#include "smoothlab/adversaries/adversaries.hpp"
#include "smoothlab/core/errors.hpp"
#include "smoothlab/core/json_io.hpp"
#include "../support/oracles.hpp"

using namespace smoothlab;
using namespace smoothlab::adversaries;

namespace {

void check_witness(const StreamBundle& b) {
  REQUIRE(b.witness.has_value());
  for (const auto& [x, y] : b.stream.pairs) REQUIRE((*b.witness)(x) == y);
}

}  // namespace

TEST_CASE("unit-interval separation streams are distinct, realizable, and fully anchored") {
  Rng r(1);
  for (std::size_t T : {1u, 2u, 17u, 256u}) {
    const auto b = separation_stream(T, BaseMeasure::uniform_unit(), r);
    REQUIRE(b.stream.pairs.size() == T);
    check_witness(b);
    CHECK(b.distinct);
    std::set<Instance> seen;
    for (std::size_t t = 0; t < T; ++t) {
      const auto& [x, y] = b.stream.pairs[t];
      CHECK(seen.insert(x).second);
      REQUIRE(y.is_anchored());
      // The t-th point sits at position t of the hidden sequence.
      CHECK(y.prefix().size() == t + 1);
    }
    CHECK(b.process.sigma() == 1.0);
  }
  CHECK(separation_stream(0, BaseMeasure::uniform_unit(), r).stream.pairs.size() == 0);
}

TEST_CASE("grid separation streams") {
  Rng r(2);
  const auto mu = BaseMeasure::uniform_grid(6);
  CHECK_THROWS_AS(separation_stream(5, mu, r), PreconditionError);
  int distinct = 0;
  const int reps = 4000;
  for (int rep = 0; rep < reps; ++rep) {
    const auto b = separation_stream(12, mu, r);
    check_witness(b);
    std::set<Instance> first;
    for (std::size_t t = 0; t < 6; ++t) first.insert(b.stream.pairs[t].x);
    CHECK(b.distinct == (first.size() == 6));
    distinct += b.distinct;
  }
  const double p = oracle::distinct_probability(6, 36);
  CHECK(std::abs(distinct / double(reps) - p) < 4 * std::sqrt(p * (1 - p) / reps));
}

TEST_CASE("coin-flip streams have a finite-support witness and fair labels") {
  Rng r(3);
  const auto b = coinflip_stream(4000, r);
  check_witness(b);
  int ones = 0;
  for (const auto& [x, y] : b.stream.pairs) ones += y.bit_value();
  CHECK(std::abs(ones - 2000) < 4 * std::sqrt(1000.0));
}

TEST_CASE("smooth processes") {
  const auto mu = BaseMeasure::uniform_grid(8);
  for (double sigma : {1.0, 0.5, 0.1, 1.0 / 64}) {
    const auto p = make_smooth_process(ProcessSpec::sliding_window(), sigma, mu, 50);
    REQUIRE(p.size() == 50);
    for (std::size_t t = 0; t < p.size(); ++t) CHECK(smoothness_certificate(p[t], mu, sigma));
  }
  CHECK_THROWS_AS(make_smooth_process(ProcessSpec::sliding_window(0.5), 0.5, mu, 10), ConfigError);
  CHECK_THROWS_AS(make_smooth_process(ProcessSpec::base(), 0.0, mu, 10), ConfigError);
  CHECK_THROWS_AS(make_smooth_process(ProcessSpec::base(), 1.5, mu, 10), ConfigError);
  CHECK_NOTHROW(make_smooth_process(ProcessSpec::sliding_window(), 0.25, BaseMeasure::uniform_unit(), 10));
}

TEST_CASE("the window slides from the first cells to the last") {
  const auto mu = BaseMeasure::uniform_grid(4);
  const auto p = make_smooth_process(ProcessSpec::sliding_window(), 0.25, mu, 5);
  Rng r(4);
  for (int i = 0; i < 50; ++i) {
    CHECK(sample_instance(p[0], r).index() <= 4);
    CHECK(sample_instance(p[4], r).index() >= 13);
  }
}

TEST_CASE("realizable smooth streams follow the target") {
  const auto mu = BaseMeasure::uniform_grid(8);
  const classes::Hypothesis h = classes::ThresholdHypothesis{Instance::grid(20, 8)};
  Rng r(5);
  const auto b = realizable_smooth_stream(h, make_smooth_process(ProcessSpec::sliding_window(), 0.5, mu, 100), r);
  CHECK(b.stream.pairs.size() == 100);
  check_witness(b);
}

TEST_CASE("bundles and process specs round-trip through JSON") {
  Rng r(6);
  for (const auto& b : {separation_stream(20, BaseMeasure::uniform_grid(4), r), coinflip_stream(10, r)}) {
    const auto back = bundle_from_json(to_json(b));
    CHECK(back.stream == b.stream);
    CHECK(back.witness == b.witness);
    CHECK(back.distinct == b.distinct);
    CHECK(back.resamples == b.resamples);
    CHECK(back.process.size() == b.process.size());
  }
  const auto spec = process_spec_from_json(to_json(ProcessSpec::sliding_window(2.0)));
  CHECK(spec.kind == ProcessSpec::Kind::SlidingWindow);
  CHECK(spec.width_factor == 2.0);
  CHECK(process_spec_from_json(nlohmann::json("base")).kind == ProcessSpec::Kind::Base);
  CHECK(process_spec_from_json(nlohmann::json("sliding_window")).kind == ProcessSpec::Kind::SlidingWindow);
  CHECK_THROWS_AS(process_spec_from_json(nlohmann::json("gaussian")), ConfigError);
}
