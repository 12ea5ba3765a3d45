#include "smoothlab/covering/complexity.hpp"

#include <algorithm>
#include <cmath>

#include "smoothlab/core/errors.hpp"
#include "smoothlab/covering/cover.hpp"

namespace smoothlab::covering {

using classes::Hypothesis;

ViewBuilder fixed_class(std::vector<Hypothesis> hypotheses) {
  return [hs = std::move(hypotheses)](std::span<const Instance>) { return hs; };
}

std::vector<ComplexityEstimate> estimate_complexity_C(const ViewBuilder& builder, const BaseMeasure& mu, double sigma,
                                                      std::span<const double> eps_list, const ComplexityGrid& grid,
                                                      Rng& rng) {
  if (grid.n_grid.empty() || grid.processes.empty() || grid.trials == 0) {
    throw PreconditionError("complexity estimate needs a nonempty n grid, process family and trial count");
  }
  std::vector<ComplexityEstimate> out(eps_list.size());
  for (std::size_t e = 0; e < eps_list.size(); ++e) out[e].eps = eps_list[e];

  for (std::size_t n : grid.n_grid) {
    if (n == 0) throw PreconditionError("complexity estimate sample sizes must be positive");
    for (const auto& spec : grid.processes) {
      const auto process = adversaries::make_smooth_process(spec, sigma, mu, n);
      std::vector<std::vector<double>> counts(eps_list.size());
      std::vector<char> exact(eps_list.size(), 1);
      for (std::size_t trial = 0; trial < grid.trials; ++trial) {
        const auto sample = process.sample(rng);
        const auto hs = builder(sample);
        const auto view = FiniteMetricView::from_table(label_table(hs, sample)).deduplicated();
        for (std::size_t e = 0; e < eps_list.size(); ++e) {
          const auto b = cover_number_bounds(view, eps_list[e]);
          counts[e].push_back(static_cast<double>(b.upper));
          if (!b.exact) exact[e] = 0;
        }
      }
      for (std::size_t e = 0; e < eps_list.size(); ++e) {
        const auto& c = counts[e];
        double mean = 0.0;
        for (double v : c) mean += v;
        mean /= static_cast<double>(c.size());
        double var = 0.0;
        for (double v : c) var += (v - mean) * (v - mean);
        const double se = c.size() > 1 ? std::sqrt(var / static_cast<double>(c.size() - 1) / static_cast<double>(c.size())) : 0.0;
        ComplexityCell cell{n, spec.name(), mean, se, static_cast<std::size_t>(*std::max_element(c.begin(), c.end())),
                            exact[e] != 0};
        out[e].value = std::max(out[e].value, mean);
        out[e].exact = out[e].exact && cell.exact;
        out[e].cells.push_back(std::move(cell));
      }
    }
  }

  std::string truncation = "sup over n truncated to {";
  for (std::size_t i = 0; i < grid.n_grid.size(); ++i) {
    truncation += (i ? ", " : "") + std::to_string(grid.n_grid[i]);
  }
  truncation += "}; sup over smooth processes truncated to {";
  for (std::size_t i = 0; i < grid.processes.size(); ++i) {
    truncation += (i ? ", " : "") + grid.processes[i].name();
  }
  truncation += "}; " + std::to_string(grid.trials) + " trials per cell";
  for (auto& est : out) {
    est.truncation = truncation + (est.exact ? "" : "; some counts are greedy upper bounds");
  }
  return out;
}

ComplexityEstimate estimate_complexity_C(const ViewBuilder& builder, const BaseMeasure& mu, double sigma, double eps,
                                         const ComplexityGrid& grid, Rng& rng) {
  const double one[] = {eps};
  return estimate_complexity_C(builder, mu, sigma, one, grid, rng).front();
}

nlohmann::json to_json(const ComplexityEstimate& est) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : est.cells) {
    cells.push_back({{"n", c.n},
                     {"process", c.process},
                     {"mean", c.mean},
                     {"std_error", c.std_error},
                     {"max_seen", c.max_seen},
                     {"exact", c.exact}});
  }
  return {{"eps", est.eps}, {"value", est.value}, {"exact", est.exact}, {"truncation", est.truncation},
          {"cells", std::move(cells)}};
}

}  // namespace smoothlab::covering
