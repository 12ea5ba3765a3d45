#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "smoothlab/core/instance.hpp"
#include "smoothlab/core/label.hpp"

namespace smoothlab::classes {

// Reduced fraction num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::uint64_t den = 1;

  friend auto operator<=>(const Rational&, const Rational&) = default;
};

// Reduces num/den; throws DomainError when den == 0.
Rational make_rational(std::int64_t num, std::int64_t den);
// True iff the reduced denominator is a power of two.
bool is_dyadic(const Rational& q);

// h^theta over (x_1..x_n): ((x_1..x_n), theta_{<=t}) at x = x_t, and
// ((x_1..x_n), star) everywhere else.
class SeparationHypothesis {
 public:
  // Throws DomainError unless theta.size() == seq->size() >= 1.
  SeparationHypothesis(SequencePtr seq, BitString theta);

  const InstanceSequence& sequence() const { return *seq_; }
  const SequencePtr& sequence_ptr() const { return seq_; }
  const BitString& theta() const { return theta_; }

  Label operator()(const Instance& x) const;

  friend bool operator==(const SeparationHypothesis& a, const SeparationHypothesis& b) {
    return a.theta_ == b.theta_ && (a.seq_ == b.seq_ || *a.seq_ == *b.seq_);
  }

 private:
  SequencePtr seq_;
  BitString theta_;
};

// x -> 1{x in S} for a finite S. S is either a set of instances or a set of
// non-dyadic rationals; the latter never contains a sampled instance.
class IndicatorHypothesis {
 public:
  static IndicatorHypothesis over_instances(std::vector<Instance> support);
  // Throws DomainError if any element is dyadic (integers included).
  static IndicatorHypothesis over_rationals(std::vector<Rational> support);

  bool rational_support() const { return rational_; }
  const std::set<Instance>& instances() const { return instances_; }
  const std::set<Rational>& rationals() const { return rationals_; }

  bool contains(const Instance& x) const;
  bool contains(const Rational& q) const;

  Label operator()(const Instance& x) const { return Label::bit(contains(x)); }

  friend bool operator==(const IndicatorHypothesis&, const IndicatorHypothesis&) = default;

 private:
  IndicatorHypothesis() = default;
  bool rational_ = false;
  std::set<Instance> instances_;
  std::set<Rational> rationals_;
};

// x -> a for a natural number a.
struct ConstantHypothesis {
  std::uint64_t value = 0;

  Label operator()(const Instance&) const { return Label::nat(value); }
  friend bool operator==(const ConstantHypothesis&, const ConstantHypothesis&) = default;
};

// x -> 1{x >= cutoff} under the total order on instances.
struct ThresholdHypothesis {
  Instance cutoff;

  Label operator()(const Instance& x) const { return Label::bit(!(x < cutoff)); }
  friend bool operator==(const ThresholdHypothesis&, const ThresholdHypothesis&) = default;
};

enum class Family : std::uint8_t { Separation, Indicator, Constant, Threshold };

const char* to_string(Family family);
// Label variant produced by every member of the family.
Label::Kind label_kind(Family family);

// Evaluable hypothesis tagged with its class family.
class Hypothesis {
 public:
  using Variant = std::variant<SeparationHypothesis, IndicatorHypothesis, ConstantHypothesis, ThresholdHypothesis>;

  Hypothesis(SeparationHypothesis h) : h_(std::move(h)) {}
  Hypothesis(IndicatorHypothesis h) : h_(std::move(h)) {}
  Hypothesis(ConstantHypothesis h) : h_(h) {}
  Hypothesis(ThresholdHypothesis h) : h_(h) {}

  Family family() const { return static_cast<Family>(h_.index()); }
  const Variant& variant() const { return h_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&h_);
  }

  Label operator()(const Instance& x) const {
    return std::visit([&](const auto& h) { return h(x); }, h_);
  }

  std::string describe() const;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;

 private:
  Variant h_;
};

inline Label separation_eval(const SeparationHypothesis& h, const Instance& x) { return h(x); }
inline Label indicator_eval(const IndicatorHypothesis& h, const Instance& x) { return h(x); }
inline Label constant_eval(const ConstantHypothesis& h, const Instance& x) { return h(x); }
inline Label threshold_eval(const ThresholdHypothesis& h, const Instance& x) { return h(x); }

// Finite enumerations used throughout the experiments.

// Thresholds with cutoffs at every cell 1..side^2 of the grid.
std::vector<Hypothesis> grid_thresholds(std::uint32_t side);
// Constants 1..count.
std::vector<Hypothesis> constants(std::uint64_t count);

}  // namespace smoothlab::classes
