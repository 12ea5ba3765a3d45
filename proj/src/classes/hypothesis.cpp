#include "smoothlab/classes/hypothesis.hpp"

#include <numeric>
#include <sstream>

#include "smoothlab/core/errors.hpp"

namespace smoothlab::classes {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, static_cast<std::uint64_t>(den / g)};
}

bool is_dyadic(const Rational& q) { return (q.den & (q.den - 1)) == 0; }

SeparationHypothesis::SeparationHypothesis(SequencePtr seq, BitString theta)
    : seq_(std::move(seq)), theta_(std::move(theta)) {
  if (!seq_ || seq_->empty()) throw DomainError("separation hypothesis needs a nonempty sequence");
  if (theta_.size() != seq_->size()) {
    throw DomainError("theta has length " + std::to_string(theta_.size()) + ", sequence has " +
                      std::to_string(seq_->size()));
  }
}

Label SeparationHypothesis::operator()(const Instance& x) const {
  if (auto t = seq_->position(x)) {
    return Label::anchored(seq_, BitString(theta_.begin(), theta_.begin() + static_cast<std::ptrdiff_t>(*t)));
  }
  return Label::anchored_star(seq_);
}

IndicatorHypothesis IndicatorHypothesis::over_instances(std::vector<Instance> support) {
  IndicatorHypothesis h;
  h.instances_.insert(support.begin(), support.end());
  return h;
}

IndicatorHypothesis IndicatorHypothesis::over_rationals(std::vector<Rational> support) {
  IndicatorHypothesis h;
  h.rational_ = true;
  for (const auto& q : support) {
    const Rational r = make_rational(q.num, static_cast<std::int64_t>(q.den));
    if (is_dyadic(r)) {
      throw DomainError("rational support element " + std::to_string(r.num) + "/" + std::to_string(r.den) +
                        " is dyadic");
    }
    h.rationals_.insert(r);
  }
  return h;
}

bool IndicatorHypothesis::contains(const Instance& x) const {
  // Instances are dyadic points or integer cells: never a non-dyadic rational.
  if (rational_) return false;
  return instances_.count(x) != 0;
}

bool IndicatorHypothesis::contains(const Rational& q) const {
  if (!rational_) return false;
  return rationals_.count(make_rational(q.num, static_cast<std::int64_t>(q.den))) != 0;
}

const char* to_string(Family family) {
  switch (family) {
    case Family::Separation:
      return "separation";
    case Family::Indicator:
      return "indicator";
    case Family::Constant:
      return "constant";
    case Family::Threshold:
      return "threshold";
  }
  return "?";
}

Label::Kind label_kind(Family family) {
  switch (family) {
    case Family::Separation:
      return Label::Kind::Anchored;
    case Family::Constant:
      return Label::Kind::Nat;
    case Family::Indicator:
    case Family::Threshold:
      return Label::Kind::Bit;
  }
  return Label::Kind::Bit;
}

std::string Hypothesis::describe() const {
  std::ostringstream out;
  out << to_string(family()) << '(';
  std::visit(
      [&](const auto& h) {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, SeparationHypothesis>) {
          out << "n=" << h.sequence().size() << ", theta=" << bits_to_string(h.theta());
        } else if constexpr (std::is_same_v<T, IndicatorHypothesis>) {
          out << (h.rational_support() ? h.rationals().size() : h.instances().size())
              << (h.rational_support() ? " rationals" : " instances");
        } else if constexpr (std::is_same_v<T, ConstantHypothesis>) {
          out << h.value;
        } else {
          out << h.cutoff.to_string();
        }
      },
      h_);
  out << ')';
  return out.str();
}

std::vector<Hypothesis> grid_thresholds(std::uint32_t side) {
  std::vector<Hypothesis> out;
  const std::uint64_t cells = static_cast<std::uint64_t>(side) * side;
  out.reserve(cells);
  for (std::uint64_t c = 1; c <= cells; ++c) out.emplace_back(ThresholdHypothesis{Instance::grid(c, side)});
  return out;
}

std::vector<Hypothesis> constants(std::uint64_t count) {
  std::vector<Hypothesis> out;
  out.reserve(count);
  for (std::uint64_t a = 1; a <= count; ++a) out.emplace_back(ConstantHypothesis{a});
  return out;
}

}  // namespace smoothlab::classes
