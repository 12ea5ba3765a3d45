#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "smoothlab/classes/hypothesis.hpp"
#include "smoothlab/core/measure.hpp"
#include "smoothlab/core/rng.hpp"

namespace smoothlab::covering {

// Distances within this of a scale count as on the ball boundary.
inline constexpr double kDistanceTolerance = 1e-12;

// Value codes of a finite function family on finitely many points:
// rows[i][k] is the code of f_i at point k. Empty weights mean the uniform
// (empirical) measure over the columns.
struct LabelTable {
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<double> weights;

  std::size_t functions() const { return rows.size(); }
  std::size_t points() const { return rows.empty() ? 0 : rows.front().size(); }
  // Weighted disagreement mass between rows i and j.
  double distance(std::size_t i, std::size_t j) const;
};

// Codes h(x) for every hypothesis and point; equal labels share a code.
LabelTable label_table(std::span<const classes::Hypothesis> hypotheses, std::span<const Instance> points,
                       std::vector<double> weights = {});

// {0,1} table of binary-valued hypotheses (LabelTypeError otherwise).
LabelTable binary_table(std::span<const classes::Hypothesis> hypotheses, std::span<const Instance> points);

// A finite pseudometric space. Construction checks the zero diagonal,
// symmetry, range [0,1] and the triangle inequality (to 1e-12).
class FiniteMetricView {
 public:
  FiniteMetricView() = default;
  FiniteMetricView(std::size_t size, std::vector<double> matrix, std::vector<classes::Hypothesis> items = {});

  // Weighted Hamming metric of the table rows. These are pseudometrics by
  // construction, so only the cheap checks run.
  static FiniteMetricView from_table(const LabelTable& table, std::vector<classes::Hypothesis> items = {});

  std::size_t size() const { return size_; }
  double distance(std::size_t i, std::size_t j) const { return matrix_[i * size_ + j]; }
  const std::vector<classes::Hypothesis>& items() const { return items_; }
  double diameter() const;

  // Collapses items at distance 0 into their lowest-index representative.
  // Cover and packing numbers are unchanged by this.
  FiniteMetricView deduplicated(std::vector<std::size_t>* representatives = nullptr) const;

  // Sub-view on the given indices, in that order.
  FiniteMetricView restricted(std::span<const std::size_t> indices) const;

 private:
  struct Trusted {};
  FiniteMetricView(Trusted, std::size_t size, std::vector<double> matrix, std::vector<classes::Hypothesis> items);
  void check_basic() const;

  std::size_t size_ = 0;
  std::vector<double> matrix_;
  std::vector<classes::Hypothesis> items_;
};

// d_n over the hypotheses on a sample (empirical measure).
FiniteMetricView empirical_view(std::span<const classes::Hypothesis> hypotheses, std::span<const Instance> sample);

// Exact d_mu over a grid base measure (DomainError on the unit domain).
FiniteMetricView base_measure_view(std::span<const classes::Hypothesis> hypotheses, const BaseMeasure& grid);

// Exact Hamming fraction on the sample; PreconditionError when empty.
double empirical_distance(const classes::Hypothesis& h1, const classes::Hypothesis& h2,
                          std::span<const Instance> sample);

struct DistanceEstimate {
  double value = 0.0;
  double std_error = 0.0;
  bool exact = false;
  std::size_t samples = 0;
};

// P_{x~mu}[h1(x) != h2(x)]: exact summation on a grid, Monte Carlo with
// n_samples draws on the unit domain.
DistanceEstimate d_mu_estimate(const classes::Hypothesis& h1, const classes::Hypothesis& h2, const BaseMeasure& mu,
                               std::size_t n_samples, Rng& rng);

nlohmann::json to_json(const FiniteMetricView& view);
FiniteMetricView view_from_json(const nlohmann::json& j);

}  // namespace smoothlab::covering
