#include "smoothlab/core/instance.hpp"

#include <algorithm>
#include <cmath>

#include "smoothlab/core/errors.hpp"

namespace smoothlab {

Instance Instance::grid(std::uint64_t index, std::uint32_t side) {
  const std::uint64_t cells = static_cast<std::uint64_t>(side) * side;
  if (side == 0 || index < 1 || index > cells) {
    throw DomainError("grid index " + std::to_string(index) + " outside [1, " +
                      std::to_string(cells) + "]");
  }
  return Instance(Kind::Grid, index, side);
}

Instance Instance::from_unit(double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("dyadic point must lie in [0, 1)");
  }
  return dyadic(static_cast<std::uint64_t>(std::ldexp(x, 64)));
}

std::uint64_t Instance::numerator() const {
  if (!is_dyadic()) throw DomainError("numerator() on a grid instance");
  return value_;
}

std::uint64_t Instance::index() const {
  if (!is_grid()) throw DomainError("index() on a dyadic instance");
  return value_;
}

std::uint32_t Instance::side() const {
  if (!is_grid()) throw DomainError("side() on a dyadic instance");
  return side_;
}

double Instance::as_double() const {
  return is_dyadic() ? std::ldexp(static_cast<double>(value_), -64) : static_cast<double>(value_);
}

std::string Instance::to_string() const {
  if (is_dyadic()) return "d:" + std::to_string(value_);
  return "g" + std::to_string(side_) + ":" + std::to_string(value_);
}

std::size_t InstanceHash::operator()(const Instance& x) const noexcept {
  std::uint64_t h = x.raw() * 0x9E3779B97F4A7C15ull;
  h ^= (static_cast<std::uint64_t>(x.kind()) << 1) + (x.is_grid() ? x.side() : 0u);
  h ^= h >> 31;
  return static_cast<std::size_t>(h);
}

InstanceSequence::InstanceSequence(std::vector<Instance> items) : items_(std::move(items)) {
  sorted_.reserve(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i) sorted_.emplace_back(items_[i], i + 1);
  std::sort(sorted_.begin(), sorted_.end());
  for (std::size_t i = 1; i < sorted_.size(); ++i) {
    if (sorted_[i - 1].first == sorted_[i].first) {
      throw DomainError("instance sequence has repeated item " + sorted_[i].first.to_string());
    }
  }
}

std::optional<std::size_t> InstanceSequence::position(const Instance& x) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x,
                             [](const auto& entry, const Instance& key) { return entry.first < key; });
  if (it != sorted_.end() && it->first == x) return it->second;
  return std::nullopt;
}

bool all_distinct(std::span<const Instance> xs) {
  std::vector<Instance> copy(xs.begin(), xs.end());
  std::sort(copy.begin(), copy.end());
  return std::adjacent_find(copy.begin(), copy.end()) == copy.end();
}

}  // namespace smoothlab
