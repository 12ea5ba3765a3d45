#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "smoothlab/adversaries/adversaries.hpp"
#include "smoothlab/classes/hypothesis.hpp"
#include "smoothlab/core/measure.hpp"
#include "smoothlab/core/rng.hpp"

namespace smoothlab::covering {

// Restricts a class to a finite family for one sample.
using ViewBuilder = std::function<std::vector<classes::Hypothesis>(std::span<const Instance>)>;

// The same finite family for every sample.
ViewBuilder fixed_class(std::vector<classes::Hypothesis> hypotheses);

struct ComplexityCell {
  std::size_t n = 0;
  std::string process;
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t max_seen = 0;
  bool exact = true;  // false if any trial fell back to the greedy upper bound
};

struct ComplexityEstimate {
  double eps = 0.0;
  double value = 0.0;  // max over cells of the mean covering number
  bool exact = true;
  std::vector<ComplexityCell> cells;
  std::string truncation;  // which sups were replaced by finite grids
};

struct ComplexityGrid {
  std::vector<std::size_t> n_grid;
  std::vector<adversaries::ProcessSpec> processes;
  std::size_t trials = 1;
};

// Truncated estimate of sup_n sup_nu E[N(eps, H, d_n)]: for every n in the
// grid and every process in the family, the Monte-Carlo mean over trials of
// the covering number of the built view (exact under the item gate, greedy
// above it), then the max over all cells.
ComplexityEstimate estimate_complexity_C(const ViewBuilder& builder, const BaseMeasure& mu, double sigma, double eps,
                                         const ComplexityGrid& grid, Rng& rng);

// Same estimate at several scales; each sample's view is shared across them.
std::vector<ComplexityEstimate> estimate_complexity_C(const ViewBuilder& builder, const BaseMeasure& mu, double sigma,
                                                      std::span<const double> eps_list, const ComplexityGrid& grid,
                                                      Rng& rng);

nlohmann::json to_json(const ComplexityEstimate& estimate);

}  // namespace smoothlab::covering
