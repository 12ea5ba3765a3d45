#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace smoothlab {

// A point of the instance space: either a dyadic point numerator / 2^64 of
// [0, 1), or a cell index in {1, ..., m^2} of the grid domain.
class Instance {
 public:
  enum class Kind : std::uint8_t { Dyadic = 0, Grid = 1 };

  static Instance dyadic(std::uint64_t numerator) { return Instance(Kind::Dyadic, numerator, 0); }
  // Throws DomainError unless 1 <= index <= side^2.
  static Instance grid(std::uint64_t index, std::uint32_t side);
  // Nearest dyadic point at or below x; x must lie in [0, 1).
  static Instance from_unit(double x);

  Kind kind() const { return kind_; }
  bool is_dyadic() const { return kind_ == Kind::Dyadic; }
  bool is_grid() const { return kind_ == Kind::Grid; }

  std::uint64_t numerator() const;  // dyadic only
  std::uint64_t index() const;      // grid only
  std::uint32_t side() const;       // grid only; the m in m^2 cells
  std::uint64_t raw() const { return value_; }

  // Position in [0, 1) for dyadics, the plain index for grid cells.
  double as_double() const;
  std::string to_string() const;

  friend bool operator==(const Instance&, const Instance&) = default;
  // Dyadic points precede grid cells; within a kind, by value then side.
  friend std::strong_ordering operator<=>(const Instance&, const Instance&) = default;

 private:
  Instance(Kind kind, std::uint64_t value, std::uint32_t side)
      : kind_(kind), side_(side), value_(value) {}

  Kind kind_;
  std::uint32_t side_;
  std::uint64_t value_;
};

struct InstanceHash {
  std::size_t operator()(const Instance& x) const noexcept;
};

// Ordered list of pairwise-distinct instances, (x_1, ..., x_n).
class InstanceSequence {
 public:
  InstanceSequence() = default;
  // Throws DomainError if two items coincide.
  explicit InstanceSequence(std::vector<Instance> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Instance& operator[](std::size_t i) const { return items_[i]; }
  std::span<const Instance> items() const { return items_; }

  // 1-based position t with x == x_t, if any.
  std::optional<std::size_t> position(const Instance& x) const;

  friend bool operator==(const InstanceSequence& a, const InstanceSequence& b) {
    return a.items_ == b.items_;
  }

 private:
  std::vector<Instance> items_;
  std::vector<std::pair<Instance, std::size_t>> sorted_;  // lookup index
};

// True iff the instances are pairwise distinct.
bool all_distinct(std::span<const Instance> xs);

}  // namespace smoothlab
