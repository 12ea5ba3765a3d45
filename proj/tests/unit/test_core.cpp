#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "smoothlab/core/errors.hpp"
#include "smoothlab/core/game.hpp"
#include "smoothlab/core/instance.hpp"
#include "smoothlab/core/json_io.hpp"
#include "smoothlab/core/label.hpp"
#include "smoothlab/core/measure.hpp"
#include "smoothlab/core/rng.hpp"
#include "../support/generators.hpp"

using namespace smoothlab;

TEST_SUITE("rng") {
  TEST_CASE("same seed and stream reproduce the sequence") {
    Rng a(42, 3), b(42, 3), c(42, 4);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
      const auto x = a.next_u64();
      CHECK(x == b.next_u64());
      differs = differs || x != c.next_u64();
    }
    CHECK(differs);
  }

  TEST_CASE("derive is a fresh generator for the sub-stream") {
    Rng a(9, 0);
    a.next_u64();
    Rng d = a.derive(5);
    Rng e(9, 5);
    CHECK(d.next_u64() == e.next_u64());
  }

  TEST_CASE("uniform_below stays in range and is roughly flat") {
    Rng r(1);
    std::map<std::uint64_t, int> counts;
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) {
      const auto v = r.uniform_below(6);
      REQUIRE(v < 6);
      ++counts[v];
    }
    const double p = 1.0 / 6.0;
    const double se = std::sqrt(draws * p * (1 - p));
    for (const auto& [v, c] : counts) CHECK(std::abs(c - draws * p) < 5 * se);
  }

  TEST_CASE("uniform_between handles degenerate and full ranges") {
    Rng r(2);
    CHECK(r.uniform_between(7, 7) == 7);
    for (int i = 0; i < 100; ++i) {
      const auto v = r.uniform_between(3, 5);
      CHECK((v >= 3 && v <= 5));
    }
    (void)r.uniform_between(0, UINT64_MAX);
  }

  TEST_CASE("uniform01 lies in [0,1) with mean near one half") {
    Rng r(3);
    double sum = 0;
    for (int i = 0; i < 20000; ++i) {
      const double u = r.uniform01();
      REQUIRE(u >= 0.0);
      REQUIRE(u < 1.0);
      sum += u;
    }
    CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.02));
  }
}

TEST_SUITE("instance") {
  TEST_CASE("grid cells are 1-based and bounded") {
    CHECK(Instance::grid(1, 8).index() == 1);
    CHECK(Instance::grid(64, 8).index() == 64);
    CHECK_THROWS_AS(Instance::grid(0, 8), DomainError);
    CHECK_THROWS_AS(Instance::grid(65, 8), DomainError);
  }

  TEST_CASE("dyadic conversion and accessors") {
    const auto x = Instance::from_unit(0.5);
    CHECK(x.numerator() == (std::uint64_t{1} << 63));
    CHECK(x.as_double() == 0.5);
    CHECK_THROWS_AS(Instance::from_unit(1.0), DomainError);
    CHECK_THROWS_AS(x.index(), DomainError);
    CHECK_THROWS_AS(Instance::grid(3, 4).numerator(), DomainError);
  }

  TEST_CASE("text form") {
    CHECK(Instance::dyadic(5).to_string() == "d:5");
    CHECK(Instance::grid(3, 4).to_string() == "g4:3");
  }

  TEST_CASE("sequence rejects repeats and reports 1-based positions") {
    const auto a = Instance::dyadic(10), b = Instance::dyadic(3), c = Instance::dyadic(7);
    InstanceSequence s({a, b, c});
    CHECK(s.position(a) == 1u);
    CHECK(s.position(b) == 2u);
    CHECK(s.position(c) == 3u);
    CHECK_FALSE(s.position(Instance::dyadic(4)).has_value());
    CHECK_THROWS_AS(InstanceSequence({a, b, a}), DomainError);
  }

  TEST_CASE("position agrees with a linear scan on random sequences") {
    Rng r(11);
    for (int rep = 0; rep < 50; ++rep) {
      const auto xs = gen::distinct_dyadics(r, 1 + r.uniform_below(30));
      InstanceSequence s(xs);
      for (std::size_t i = 0; i < xs.size(); ++i) CHECK(s.position(xs[i]) == i + 1);
    }
  }
}

TEST_SUITE("label") {
  const auto seq = make_sequence({Instance::dyadic(1), Instance::dyadic(2), Instance::dyadic(3)});

  TEST_CASE("anchored prefixes must fit the sequence") {
    CHECK_NOTHROW(Label::anchored(seq, {true}));
    CHECK_NOTHROW(Label::anchored(seq, {true, false, true}));
    CHECK_THROWS_AS(Label::anchored(seq, {}), DomainError);
    CHECK_THROWS_AS(Label::anchored(seq, {true, false, true, true}), DomainError);
  }

  TEST_CASE("equality compares content, not storage") {
    const auto copy = make_sequence({Instance::dyadic(1), Instance::dyadic(2), Instance::dyadic(3)});
    CHECK(Label::anchored(seq, {true, false}) == Label::anchored(copy, {true, false}));
    CHECK(Label::anchored(seq, {true, false}) != Label::anchored(seq, {true, true}));
    CHECK(Label::anchored(seq, {true}) != Label::anchored_star(seq));
    CHECK(Label::anchored_star(seq) == Label::anchored_star(copy));
    CHECK(Label::bit(true) != Label::nat(1));
    CHECK(Label::anchored(seq, {true}).hash() == Label::anchored(copy, {true}).hash());
  }

  TEST_CASE("canonical forms") {
    CHECK(Label::bit(true).canonical() == "b:1");
    CHECK(Label::nat(7).canonical() == "n:7");
    CHECK(Label::anchored(seq, {false, true}).canonical() == "a:[d:1,d:2,d:3]:01");
    CHECK(Label::anchored_star(seq).canonical() == "a:[d:1,d:2,d:3]:*");
  }

  TEST_CASE("wrong-kind accessors throw") {
    CHECK_THROWS_AS(Label::nat(2).bit_value(), LabelTypeError);
    CHECK_THROWS_AS(Label::bit(true).nat_value(), LabelTypeError);
    CHECK_THROWS_AS(Label::bit(true).prefix(), LabelTypeError);
    CHECK_THROWS_AS(Label::nat(3).is_star(), LabelTypeError);
  }

  TEST_CASE("bit strings") {
    CHECK(bits_to_string({true, false, true}) == "101");
    CHECK(bits_from_string("0110") == BitString{false, true, true, false});
    CHECK_THROWS_AS(bits_from_string("01x"), ConfigError);
  }
}

TEST_SUITE("measure") {
  TEST_CASE("window of width sigma is sigma-smooth, width sigma/2 is not") {
    const auto mu = BaseMeasure::uniform_grid(8);
    const auto full = SmoothDistribution::uniform_range(mu, 1, 32);
    const auto half = SmoothDistribution::uniform_range(mu, 1, 16);
    CHECK(full.density_bound() == doctest::Approx(2.0));
    CHECK(smoothness_certificate(full, mu, 0.5));
    CHECK_FALSE(smoothness_certificate(half, mu, 0.5));
  }

  TEST_CASE("a point mass on m^2 cells is exactly 1/m^2-smooth") {
    const auto mu = BaseMeasure::uniform_grid(8);
    const auto d = SmoothDistribution::point_mass(mu, 5);
    CHECK(smoothness_certificate(d, mu, 1.0 / 64.0));
    CHECK_FALSE(smoothness_certificate(d, mu, 0.5));
  }

  TEST_CASE("the base measure is smooth for every sigma") {
    const auto mu = BaseMeasure::uniform_unit();
    const auto d = SmoothDistribution::base(mu);
    for (double s : {1.0, 0.5, 0.01}) CHECK(smoothness_certificate(d, mu, s));
  }

  TEST_CASE("construction errors") {
    const auto mu = BaseMeasure::uniform_grid(4);
    CHECK_THROWS_AS(SmoothDistribution(mu, {{1, 4, 0.5}, {4, 8, 0.5}}), DomainError);
    CHECK_THROWS_AS(SmoothDistribution(mu, {{1, 17, 1.0}}), DomainError);
    CHECK_THROWS_AS(SmoothDistribution(mu, {{1, 4, -1.0}}), ConfigError);
    CHECK_THROWS_AS(smoothness_certificate(SmoothDistribution::base(mu), BaseMeasure::uniform_unit(), 1.0), DomainError);
  }

  TEST_CASE("unnormalized distributions cannot be sampled or certified into a process") {
    const auto mu = BaseMeasure::uniform_grid(4);
    SmoothDistribution d(mu, {{1, 4, 0.5}});
    Rng r(1);
    CHECK_THROWS_AS(sample_instance(d, r), ConfigError);
    CHECK_THROWS_AS(SmoothProcess(mu, 1.0, {d}), ConfigError);
  }

  TEST_CASE("process certification") {
    const auto mu = BaseMeasure::uniform_grid(4);
    CHECK_THROWS_AS(SmoothProcess(mu, 0.0, {}), ConfigError);
    CHECK_THROWS_AS(SmoothProcess(mu, 1.5, {}), ConfigError);
    CHECK_THROWS_AS(SmoothProcess(mu, 0.5, {SmoothDistribution::uniform_range(mu, 1, 4)}), ConfigError);
    CHECK_NOTHROW(SmoothProcess(mu, 0.25, {SmoothDistribution::uniform_range(mu, 1, 4)}));
  }

  TEST_CASE("samples land inside the support with the right frequencies") {
    const auto mu = BaseMeasure::uniform_grid(4);
    SmoothDistribution d(mu, {{1, 2, 0.75}, {9, 12, 0.25}});
    Rng r(5);
    int low = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      const auto x = sample_instance(d, r);
      const auto k = x.index();
      REQUIRE(((k >= 1 && k <= 2) || (k >= 9 && k <= 12)));
      low += k <= 2;
    }
    CHECK(std::abs(low / double(n) - 0.75) < 5 * std::sqrt(0.75 * 0.25 / n));
  }

  TEST_CASE("measure of index ranges") {
    CHECK(BaseMeasure::uniform_grid(4).measure_of(1, 4) == doctest::Approx(0.25));
    CHECK(static_cast<double>(BaseMeasure::uniform_unit().measure_of(0, (std::uint64_t{1} << 63) - 1)) ==
          doctest::Approx(0.5));
  }
}

namespace {

// Predicts Bit(0); optionally tries to read the current round's label.
class Peeker : public Learner {
 public:
  explicit Peeker(bool cheat, Label prediction = Label::bit(false)) : cheat_(cheat), prediction_(prediction) {}
  std::string name() const override { return "peeker"; }
  void start(std::size_t) override { seen_ = 0; }
  Label predict(const Instance&, const RoundContext& ctx, Rng&) override {
    CHECK(ctx.revealed().size() == ctx.round());
    if (ctx.round() > 0) (void)ctx.label(ctx.round() - 1);
    if (cheat_) (void)ctx.label(ctx.round());
    return prediction_;
  }
  void observe(const Instance&, const Label&) override { ++seen_; }
  bool accepts(const Label& y) const override { return y.kind() == Label::Kind::Bit; }
  std::size_t seen_ = 0;

 private:
  bool cheat_;
  Label prediction_;
};

LabeledStream bit_stream(std::initializer_list<int> ys) {
  LabeledStream s;
  std::uint64_t k = 1;
  for (int y : ys) s.pairs.push_back({Instance::dyadic(k++), Label::bit(y != 0)});
  return s;
}

}  // namespace

TEST_SUITE("game") {
  TEST_CASE("labels are revealed only after the prediction") {
    const auto s = bit_stream({1, 0, 1, 1});
    Peeker honest(false);
    Rng r(1);
    const auto rep = run_game(s, honest, r);
    CHECK(rep.learner_loss == 3);
    CHECK(honest.seen_ == 4);
    Peeker cheat(true);
    CHECK_THROWS_AS(run_game(s, cheat, r), ProtocolError);
  }

  TEST_CASE("predictions outside the learner's label domain are rejected") {
    const auto s = bit_stream({1});
    Peeker odd(false, Label::nat(1));
    Rng r(1);
    CHECK_THROWS_AS(run_game(s, odd, r), ProtocolError);
  }

  TEST_CASE("regret needs a comparator") {
    RegretReport rep;
    rep.learner_loss = 3;
    CHECK_THROWS_AS((void)rep.regret(), ProtocolError);
    rep.comparator_loss = 1;
    CHECK(rep.regret() == 2);
  }

  TEST_CASE("comparators") {
    const auto s = bit_stream({1, 0, 1});
    using classes::ConstantHypothesis;
    const classes::Hypothesis one = classes::IndicatorHypothesis::over_instances({Instance::dyadic(1), Instance::dyadic(3)});
    const classes::Hypothesis zero = classes::IndicatorHypothesis::over_instances({});
    CHECK(comparator_loss(s, RealizabilityWitness{one}) == 0);
    CHECK_THROWS_AS(comparator_loss(s, RealizabilityWitness{zero}), WitnessError);
    CHECK(comparator_loss(s, ExhaustiveOverFiniteSet{{zero}}) == 2);
    CHECK(comparator_loss(s, ExhaustiveOverFiniteSet{{zero, one}}) == 0);
    CHECK_THROWS_AS(comparator_loss(s, ExhaustiveOverFiniteSet{{}}), PreconditionError);
    CHECK(cumulative_loss(s, zero) == 2);
  }
}

TEST_SUITE("json") {
  using namespace json_io;

  TEST_CASE("round trips") {
    const auto seq = make_sequence({Instance::dyadic(UINT64_MAX), Instance::dyadic(0)});
    for (const auto& x : {Instance::dyadic(UINT64_MAX), Instance::grid(7, 3)}) CHECK(instance_from_json(to_json(x)) == x);
    for (const auto& y : {Label::bit(true), Label::nat(9), Label::anchored(seq, {true}), Label::anchored_star(seq)}) {
      CHECK(label_from_json(to_json(y)) == y);
    }
    for (const auto& mu : {BaseMeasure::uniform_unit(), BaseMeasure::uniform_grid(5)}) {
      CHECK(measure_from_json(to_json(mu)) == mu);
    }
    const std::vector<classes::Hypothesis> hs{
        classes::SeparationHypothesis(seq, {false, true}),
        classes::IndicatorHypothesis::over_instances({Instance::dyadic(4)}),
        classes::IndicatorHypothesis::over_rationals({classes::make_rational(1, 3)}),
        classes::ConstantHypothesis{5}, classes::ThresholdHypothesis{Instance::grid(3, 4)}};
    for (const auto& h : hs) CHECK(hypothesis_from_json(to_json(h)) == h);

    RegretReport rep{7, 2, 1, 0, {1, 0}};
    CHECK(report_from_json(to_json(rep)) == rep);

    LabeledStream s{{{Instance::dyadic(1), Label::anchored(seq, {true})}, {Instance::dyadic(2), Label::anchored_star(seq)}}};
    CHECK(stream_from_json(to_json(s)) == s);

    const auto mu = BaseMeasure::uniform_grid(4);
    const SmoothProcess p(mu, 0.5, {SmoothDistribution::uniform_range(mu, 1, 8), SmoothDistribution::base(mu)});
    const auto back = process_from_json(to_json(p));
    CHECK(back.size() == 2);
    CHECK(back.sigma() == 0.5);
    CHECK(back[0].density_bound() == p[0].density_bound());
  }

  TEST_CASE("missing fields are named") {
    try {
      (void)stream_from_json(nlohmann::json::object());
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("'") != std::string::npos);
    }
    CHECK_THROWS_AS(label_from_json(nlohmann::json{{"bit", 2}}), ConfigError);
    CHECK_THROWS_AS(measure_from_json(nlohmann::json{{"kind", "gaussian"}}), ConfigError);
  }

  TEST_CASE("csv rows") {
    std::ostringstream os;
    write_csv_header(os);
    write_csv_row(os, RegretReport{3, 10, 6, 1, {}});
    CHECK(os.str() == "seed,T,learner_loss,comparator_loss,regret\n3,10,6,1,5\n");
  }
}
