#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "smoothlab/core/instance.hpp"

namespace smoothlab {

using BitString = std::vector<bool>;

std::string bits_to_string(const BitString& bits);
// Parses a string of '0'/'1' characters; throws ConfigError on anything else.
BitString bits_from_string(const std::string& text);

using SequencePtr = std::shared_ptr<const InstanceSequence>;

inline SequencePtr make_sequence(std::vector<Instance> items) {
  return std::make_shared<const InstanceSequence>(std::move(items));
}

// Discrete label. Anchored labels are the tuples ((x_1..x_n), payload) of the
// separation classes, with payload either a prefix bit string or the star
// symbol; Bit and Nat serve the remaining classes.
//
// The anchored sequence is shared, never mutated, so copies stay cheap while
// equality still compares full content.
class Label {
 public:
  enum class Kind : std::uint8_t { Anchored = 0, Bit = 1, Nat = 2 };

  static Label bit(bool value) { return Label(Kind::Bit, value ? 1 : 0); }
  static Label nat(std::uint64_t value) { return Label(Kind::Nat, value); }
  // Throws DomainError unless 1 <= prefix.size() <= seq->size().
  static Label anchored(SequencePtr seq, BitString prefix);
  static Label anchored_star(SequencePtr seq);

  Kind kind() const { return kind_; }
  bool is_anchored() const { return kind_ == Kind::Anchored; }

  bool bit_value() const;           // Bit only
  std::uint64_t nat_value() const;  // Nat only

  // Anchored only.
  const InstanceSequence& sequence() const;
  const SequencePtr& sequence_ptr() const;
  bool is_star() const;
  const BitString& prefix() const;  // empty for star

  // Canonical text form: equal labels, and only equal labels, share it.
  std::string canonical() const;
  std::size_t hash() const;

  friend bool operator==(const Label& a, const Label& b);

 private:
  Label(Kind kind, std::uint64_t value) : kind_(kind), value_(value) {}

  Kind kind_;
  bool star_ = false;
  std::uint64_t value_ = 0;
  SequencePtr seq_;
  BitString prefix_;
};

struct LabelHash {
  std::size_t operator()(const Label& y) const noexcept { return y.hash(); }
};

const char* to_string(Label::Kind kind);

}  // namespace smoothlab
