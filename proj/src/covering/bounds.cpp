#include "smoothlab/covering/bounds.hpp"

#include <cmath>
#include <limits>

#include "smoothlab/core/errors.hpp"
#include "smoothlab/covering/cover.hpp"

namespace smoothlab::covering {

RegretBound eval_regret_bound(std::size_t horizon, double sigma, std::span<const double> eps_grid,
                              std::span<const double> complexities) {
  if (eps_grid.empty() || eps_grid.size() != complexities.size()) {
    throw PreconditionError("regret bound needs one complexity value per eps");
  }
  if (!(sigma > 0.0 && sigma <= 1.0)) throw PreconditionError("sigma must lie in (0, 1]");
  const double T = static_cast<double>(horizon);
  RegretBound out;
  out.value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    const double eps = eps_grid[i];
    const double c = complexities[i];
    if (!(eps > 0.0)) throw PreconditionError("eps values must be positive");
    if (!(c >= 1.0)) throw PreconditionError("complexity values must be at least 1");
    const double v = 6.0 * (eps * T / sigma + std::sqrt(T * std::log(c)));
    out.terms.push_back({eps, c, v});
    if (v < out.value) {
      out.value = v;
      out.argmin_eps = eps;
      out.argmin_complexity = c;
    }
  }
  return out;
}

double corollary_graph_bound(std::size_t horizon, std::size_t graph_dim, std::size_t label_count, double sigma) {
  const double T = static_cast<double>(horizon);
  return 12.0 * std::sqrt(T * static_cast<double>(graph_dim) *
                          std::log(41.0 * T * static_cast<double>(label_count) / (sigma * sigma)));
}

double haussler_bound(double eps, std::size_t vc) { return std::pow(41.0 / eps, static_cast<double>(vc)); }

double graph_packing_bound(double eps, std::size_t label_count, std::size_t graph_dim) {
  return std::pow(22.0 * static_cast<double>(label_count) / eps, static_cast<double>(graph_dim));
}

DiscretizationBound discretization_bound(const LabelTable& binary, std::span<const double> eps_grid) {
  if (eps_grid.empty()) throw PreconditionError("discretization bound needs an eps grid");
  const std::size_t n = binary.points();
  if (n == 0) throw PreconditionError("discretization bound needs a nonempty sample");
  std::size_t max_ones = 0;
  for (const auto& row : binary.rows) {
    std::size_t ones = 0;
    for (auto v : row) {
      if (v > 1) throw PreconditionError("discretization bound needs a {0,1}-valued table");
      ones += v;
    }
    max_ones = std::max(max_ones, ones);
  }
  DiscretizationBound out;
  out.sup_rms = std::sqrt(static_cast<double>(max_ones) / static_cast<double>(n));
  out.value = std::numeric_limits<double>::infinity();
  const auto view = FiniteMetricView::from_table(binary).deduplicated();
  for (double eps : eps_grid) {
    // For {0,1}-valued functions rho^2 = d_n.
    const auto count = cover_number_bounds(view, eps * eps).upper;
    const double v = eps + out.sup_rms * std::sqrt(2.0 * std::log(static_cast<double>(count)) / static_cast<double>(n));
    if (v < out.value) {
      out.value = v;
      out.argmin_eps = eps;
    }
  }
  return out;
}

nlohmann::json to_json(const RegretBound& b) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : b.terms) terms.push_back({{"eps", t.eps}, {"C", t.complexity}, {"bound", t.value}});
  return {{"value", b.value}, {"argmin_eps", b.argmin_eps}, {"argmin_C", b.argmin_complexity}, {"terms", terms}};
}

}  // namespace smoothlab::covering
