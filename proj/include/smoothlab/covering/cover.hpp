#pragma once

#include <cstddef>
#include <vector>

#include "smoothlab/covering/metric.hpp"

namespace smoothlab::covering {

// Exhaustive searches run on the deduplicated view and accept at most this
// many distinct items.
inline constexpr std::size_t kExactItemLimit = 20;

// Every item lies within eps (closed ball) of some chosen index.
bool is_cover(const FiniteMetricView& view, const std::vector<std::size_t>& centers, double eps);
// Chosen items are pairwise farther than eps apart.
bool is_packing(const FiniteMetricView& view, const std::vector<std::size_t>& chosen, double eps);

// Repeatedly takes the item whose eps-ball holds the most uncovered items,
// lowest index on ties. Always a valid cover; size >= the covering number.
std::vector<std::size_t> greedy_cover(const FiniteMetricView& view, double eps);

// Scans items in index order and keeps each one farther than eps from all
// kept so far. The result is a maximal eps-packing.
std::vector<std::size_t> maximal_packing(const FiniteMetricView& view, double eps);

// Minimum eps-cover size. PreconditionError above kExactItemLimit distinct items.
std::size_t exact_cover_number(const FiniteMetricView& view, double eps);
// Maximum eps-packing size, same gate.
std::size_t exact_packing_number(const FiniteMetricView& view, double eps);

struct CoverNumberBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
};

// Exact when the gate allows; otherwise a maximal 2eps-packing (lower) and
// the greedy cover (upper).
CoverNumberBounds cover_number_bounds(const FiniteMetricView& view, double eps);

}  // namespace smoothlab::covering
