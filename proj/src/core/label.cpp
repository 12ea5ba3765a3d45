#include "smoothlab/core/label.hpp"

#include <functional>

#include "smoothlab/core/errors.hpp"

namespace smoothlab {

std::string bits_to_string(const BitString& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

BitString bits_from_string(const std::string& text) {
  BitString bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw ConfigError("bit string contains '" + std::string(1, c) + "'");
    bits.push_back(c == '1');
  }
  return bits;
}

Label Label::anchored(SequencePtr seq, BitString prefix) {
  if (!seq) throw DomainError("anchored label without a sequence");
  if (prefix.empty() || prefix.size() > seq->size()) {
    throw DomainError("anchored prefix length " + std::to_string(prefix.size()) +
                      " outside [1, " + std::to_string(seq->size()) + "]");
  }
  Label y(Kind::Anchored, 0);
  y.seq_ = std::move(seq);
  y.prefix_ = std::move(prefix);
  return y;
}

Label Label::anchored_star(SequencePtr seq) {
  if (!seq) throw DomainError("anchored label without a sequence");
  Label y(Kind::Anchored, 0);
  y.seq_ = std::move(seq);
  y.star_ = true;
  return y;
}

bool Label::bit_value() const {
  if (kind_ != Kind::Bit) throw LabelTypeError("bit_value() on a non-bit label");
  return value_ != 0;
}

std::uint64_t Label::nat_value() const {
  if (kind_ != Kind::Nat) throw LabelTypeError("nat_value() on a non-nat label");
  return value_;
}

const InstanceSequence& Label::sequence() const {
  if (kind_ != Kind::Anchored) throw LabelTypeError("sequence() on a non-anchored label");
  return *seq_;
}

const SequencePtr& Label::sequence_ptr() const {
  if (kind_ != Kind::Anchored) throw LabelTypeError("sequence_ptr() on a non-anchored label");
  return seq_;
}

bool Label::is_star() const {
  if (kind_ != Kind::Anchored) throw LabelTypeError("is_star() on a non-anchored label");
  return star_;
}

const BitString& Label::prefix() const {
  if (kind_ != Kind::Anchored) throw LabelTypeError("prefix() on a non-anchored label");
  return prefix_;
}

std::string Label::canonical() const {
  switch (kind_) {
    case Kind::Bit:
      return "b:" + std::to_string(value_);
    case Kind::Nat:
      return "n:" + std::to_string(value_);
    case Kind::Anchored: {
      std::string out = "a:[";
      for (std::size_t i = 0; i < seq_->size(); ++i) {
        if (i) out += ',';
        out += (*seq_)[i].to_string();
      }
      out += "]:";
      out += star_ ? "*" : bits_to_string(prefix_);
      return out;
    }
  }
  return {};
}

std::size_t Label::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) * 0x9E3779B97F4A7C15ull;
  if (kind_ != Kind::Anchored) return h ^ std::hash<std::uint64_t>{}(value_);
  InstanceHash ih;
  for (const auto& x : seq_->items()) h = (h ^ ih(x)) * 0x100000001B3ull;
  h ^= star_ ? 0x5bd1e995u : std::hash<BitString>{}(prefix_) + prefix_.size();
  return h;
}

bool operator==(const Label& a, const Label& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != Label::Kind::Anchored) return a.value_ == b.value_;
  if (a.star_ != b.star_ || a.prefix_ != b.prefix_) return false;
  return a.seq_ == b.seq_ || *a.seq_ == *b.seq_;
}

const char* to_string(Label::Kind kind) {
  switch (kind) {
    case Label::Kind::Anchored:
      return "anchored";
    case Label::Kind::Bit:
      return "bit";
    case Label::Kind::Nat:
      return "nat";
  }
  return "?";
}

}  // namespace smoothlab
