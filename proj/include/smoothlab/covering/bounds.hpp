#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "smoothlab/covering/metric.hpp"

namespace smoothlab::covering {

struct RegretBoundTerm {
  double eps = 0.0;
  double complexity = 0.0;  // C at scale eps^2
  double value = 0.0;       // 6 (eps T / sigma + sqrt(T ln C))
};

struct RegretBound {
  double value = 0.0;
  double argmin_eps = 0.0;
  double argmin_complexity = 0.0;
  std::vector<RegretBoundTerm> terms;
};

// min over the grid of 6 (eps T / sigma + sqrt(T ln C(eps^2))), with
// complexities[i] the complexity at scale eps_grid[i]^2. PreconditionError
// on empty/misaligned input, sigma outside (0,1] or a complexity below 1.
RegretBound eval_regret_bound(std::size_t horizon, double sigma, std::span<const double> eps_grid,
                              std::span<const double> complexities);

// 12 sqrt(T G ln(41 T |Y| / sigma^2)).
double corollary_graph_bound(std::size_t horizon, std::size_t graph_dim, std::size_t label_count, double sigma);

// (41 / eps)^vc.
double haussler_bound(double eps, std::size_t vc);

// (22 |Y| / eps)^G.
double graph_packing_bound(double eps, std::size_t label_count, std::size_t graph_dim);

struct DiscretizationBound {
  double value = 0.0;
  double argmin_eps = 0.0;
  double sup_rms = 0.0;  // sup_f sqrt(E[f^2]) on the sample
};

// inf over eps in the grid of eps + sup_f sqrt(E f^2) sqrt(2 ln N(eps, F, rho) / n)
// for a {0,1} table, using N(eps, F, rho) = N(eps^2, F, d_n). Counts are
// exact under the item gate and greedy upper bounds above it.
DiscretizationBound discretization_bound(const LabelTable& binary, std::span<const double> eps_grid);

nlohmann::json to_json(const RegretBound& bound);

}  // namespace smoothlab::covering
