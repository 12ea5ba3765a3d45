#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "smoothlab/core/rng.hpp"

// Brute-force checks of the metric-entropy inequalities on randomized small
// instances. Each check counts every inequality it evaluates and every
// violation it finds.
namespace smoothlab::covering {

struct LemmaShape {
  std::size_t max_class = 12;
  std::size_t max_points = 10;
  std::size_t max_labels = 3;
  std::vector<double> eps_grid{0.1, 0.2, 0.25, 0.4, 0.5};
};

struct LemmaCheck {
  std::string name;
  std::string claim;
  std::size_t instances = 0;
  std::size_t comparisons = 0;
  std::size_t violations = 0;
  double min_slack = 0.0;  // smallest rhs - lhs over all comparisons
  std::vector<std::string> failures;  // first few violations, described

  bool passed() const { return instances > 0 && violations == 0; }
};

// M(2 eps) <= N(eps) <= M(eps) with exact packing and covering numbers.
LemmaCheck check_covering_packing_duality(Rng& rng, std::size_t instances, const LemmaShape& shape);

// N(eps, H delta H, d_n) <= N(eps/2, H, d_n)^2; classes are capped at 6
// functions so H delta H stays under the exact-search gate.
LemmaCheck check_symmetric_difference_cover(Rng& rng, std::size_t instances, const LemmaShape& shape);

// Exact Rademacher complexity <= the discretization bound over the eps grid.
LemmaCheck check_discretization_bound(Rng& rng, std::size_t instances, const LemmaShape& shape);

// N(eps, H, d) <= (41/eps)^VC: thresholds on a 64-point grid under the
// uniform and random weightings at eps in {0.05, 0.1, 0.2} plus the grid,
// and random small binary classes under d_n.
LemmaCheck check_haussler_bound(Rng& rng, std::size_t instances, const LemmaShape& shape);

// sup over empirical measures of N(eps, H, d_n) <= sup over measures on
// X x Y of N(2 eps/|Y|, loss class, d), both sides brute-forced over
// discrete measure grids, plus N(eps, loss class, d) <= (41/eps)^G on every
// measure visited.
LemmaCheck check_loss_class_cover(Rng& rng, std::size_t instances, const LemmaShape& shape);

// On a grid base measure: N(eps, H, d_mu) <= max over m of the Monte-Carlo
// mean of N(eps/2, H, d_m), allowing 3 standard errors.
LemmaCheck check_metric_entropy_from_empirical(Rng& rng, std::size_t instances, const LemmaShape& shape);

nlohmann::json to_json(const LemmaCheck& check);

}  // namespace smoothlab::covering
