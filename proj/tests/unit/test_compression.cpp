#include <doctest.h>

#include <cmath>

#include "smoothlab/compression/compression.hpp"
#include "smoothlab/core/errors.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace smoothlab;
using namespace smoothlab::compression;

namespace {

SequencePtr small_seq() {
  return make_sequence({Instance::dyadic(10), Instance::dyadic(20), Instance::dyadic(30)});
}

}  // namespace

TEST_CASE("compression keeps the longest prefix") {
  const auto seq = small_seq();
  const classes::SeparationHypothesis h(seq, {true, false, true});
  const std::vector<LabeledPair> s{{Instance::dyadic(20), h(Instance::dyadic(20))},
                                   {Instance::dyadic(5), h(Instance::dyadic(5))},
                                   {Instance::dyadic(10), h(Instance::dyadic(10))}};
  const auto kept = compress(s);
  CHECK(kept.x == Instance::dyadic(20));
  const auto g = reconstruct(kept);
  CHECK(g.theta() == BitString{true, false, false});
}

TEST_CASE("a sample of only stars reconstructs the all-zero completion") {
  const auto seq = small_seq();
  const std::vector<LabeledPair> s{{Instance::dyadic(1), Label::anchored_star(seq)}};
  CHECK(compression_learner(s).theta() == BitString{false, false, false});
}

TEST_CASE("reconstruction agrees with every realizable sample") {
  Rng r(21);
  for (int rep = 0; rep < 3000; ++rep) {
    const auto g = random_realizable_sample(r);
    REQUIRE(is_realizable(g.sample));
    const auto kept = compress(g.sample);
    CHECK(std::find(g.sample.begin(), g.sample.end(), kept) != g.sample.end());
    const auto h = reconstruct(kept);
    for (const auto& [x, y] : g.sample) REQUIRE(h(x) == y);
  }
}

TEST_CASE("batch verifier reports zero disagreements") {
  const auto rep = verify_random_samples(2000, 3);
  CHECK(rep.samples == 2000);
  CHECK(rep.points > 2000);
  CHECK(rep.ok());
}

TEST_CASE("unrealizable samples are detected") {
  const auto seq = small_seq();
  const auto other = make_sequence({Instance::dyadic(10), Instance::dyadic(21)});
  // Conflicting prefixes.
  CHECK_FALSE(is_realizable(std::vector<LabeledPair>{{Instance::dyadic(10), Label::anchored(seq, {true})},
                                                     {Instance::dyadic(20), Label::anchored(seq, {false, true})}}));
  // Prefix length does not match the position.
  CHECK_FALSE(is_realizable(std::vector<LabeledPair>{{Instance::dyadic(20), Label::anchored(seq, {true})}}));
  // Star on a sequence point.
  CHECK_FALSE(is_realizable(std::vector<LabeledPair>{{Instance::dyadic(30), Label::anchored_star(seq)}}));
  // Two different sequences.
  CHECK_FALSE(is_realizable(std::vector<LabeledPair>{{Instance::dyadic(1), Label::anchored_star(seq)},
                                                     {Instance::dyadic(2), Label::anchored_star(other)}}));
  CHECK(is_realizable(std::vector<LabeledPair>{}));
}

TEST_CASE("compression input errors") {
  CHECK_THROWS_AS(compress(std::vector<LabeledPair>{}), PreconditionError);
  CHECK_THROWS_AS(compress(std::vector<LabeledPair>{{Instance::dyadic(1), Label::bit(true)}}), RealizabilityError);
  CHECK_THROWS_AS(reconstruct({Instance::dyadic(1), Label::nat(1)}), LabelTypeError);
}

TEST_CASE("PAC bound matches the closed form") {
  Rng r(2);
  for (int rep = 0; rep < 500; ++rep) {
    const double n = 2.0 + static_cast<double>(r.uniform_below(100000));
    const double k = 1.0 + static_cast<double>(r.uniform_below(static_cast<std::uint64_t>(n / 2.0)));
    const double delta = 0.001 + 0.99 * r.uniform01();
    CHECK(pac_error_bound(n, k, delta) == doctest::Approx(oracle::pac_bound(n, k, delta)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(pac_error_bound(10, 0, 0.1), PreconditionError);
  CHECK_THROWS_AS(pac_error_bound(10, 6, 0.1), PreconditionError);
  CHECK_THROWS_AS(pac_error_bound(10, 1, 1.0), PreconditionError);
}
