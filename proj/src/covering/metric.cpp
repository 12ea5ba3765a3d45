#include "smoothlab/covering/metric.hpp"

#include <cmath>
#include <unordered_map>

#include "smoothlab/core/errors.hpp"
#include "smoothlab/core/json_io.hpp"

namespace smoothlab::covering {

using classes::Hypothesis;

double LabelTable::distance(std::size_t i, std::size_t j) const {
  const auto& a = rows[i];
  const auto& b = rows[j];
  if (weights.empty()) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < a.size(); ++k) count += a[k] != b[k];
    return a.empty() ? 0.0 : static_cast<double>(count) / static_cast<double>(a.size());
  }
  long double mass = 0.0L;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) mass += weights[k];
  }
  return static_cast<double>(mass);
}

LabelTable label_table(std::span<const Hypothesis> hypotheses, std::span<const Instance> points,
                       std::vector<double> weights) {
  if (!weights.empty() && weights.size() != points.size()) {
    throw PreconditionError("label table weights must match the number of points");
  }
  std::unordered_map<Label, std::uint32_t, LabelHash> codes;
  LabelTable table;
  table.weights = std::move(weights);
  table.rows.reserve(hypotheses.size());
  for (const auto& h : hypotheses) {
    std::vector<std::uint32_t> row;
    row.reserve(points.size());
    for (const auto& x : points) {
      auto [it, inserted] = codes.try_emplace(h(x), static_cast<std::uint32_t>(codes.size()));
      row.push_back(it->second);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

LabelTable binary_table(std::span<const Hypothesis> hypotheses, std::span<const Instance> points) {
  LabelTable table;
  for (const auto& h : hypotheses) {
    std::vector<std::uint32_t> row;
    row.reserve(points.size());
    for (const auto& x : points) row.push_back(h(x).bit_value() ? 1u : 0u);
    table.rows.push_back(std::move(row));
  }
  return table;
}

FiniteMetricView::FiniteMetricView(std::size_t size, std::vector<double> matrix, std::vector<Hypothesis> items)
    : size_(size), matrix_(std::move(matrix)), items_(std::move(items)) {
  check_basic();
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      for (std::size_t k = 0; k < size_; ++k) {
        if (distance(i, k) > distance(i, j) + distance(j, k) + kDistanceTolerance) {
          throw DomainError("metric view violates the triangle inequality at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ", " + std::to_string(k) + ")");
        }
      }
    }
  }
}

FiniteMetricView::FiniteMetricView(Trusted, std::size_t size, std::vector<double> matrix, std::vector<Hypothesis> items)
    : size_(size), matrix_(std::move(matrix)), items_(std::move(items)) {
  check_basic();
}

void FiniteMetricView::check_basic() const {
  if (matrix_.size() != size_ * size_) throw DomainError("metric view matrix must be size x size");
  if (!items_.empty() && items_.size() != size_) throw DomainError("metric view items must match its size");
  for (std::size_t i = 0; i < size_; ++i) {
    if (distance(i, i) != 0.0) throw DomainError("metric view diagonal must be zero");
    for (std::size_t j = 0; j < size_; ++j) {
      const double d = distance(i, j);
      if (!(d >= 0.0 && d <= 1.0)) throw DomainError("metric view distances must lie in [0,1]");
      if (d != distance(j, i)) throw DomainError("metric view must be symmetric");
    }
  }
}

FiniteMetricView FiniteMetricView::from_table(const LabelTable& table, std::vector<Hypothesis> items) {
  const std::size_t n = table.functions();
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::min(1.0, table.distance(i, j));
      m[i * n + j] = d;
      m[j * n + i] = d;
    }
  }
  return FiniteMetricView(Trusted{}, n, std::move(m), std::move(items));
}

double FiniteMetricView::diameter() const {
  double d = 0.0;
  for (double v : matrix_) d = std::max(d, v);
  return d;
}

FiniteMetricView FiniteMetricView::deduplicated(std::vector<std::size_t>* representatives) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size_; ++i) {
    bool fresh = true;
    for (std::size_t r : keep) {
      if (distance(r, i) == 0.0) {
        fresh = false;
        break;
      }
    }
    if (fresh) keep.push_back(i);
  }
  if (representatives) *representatives = keep;
  return restricted(keep);
}

FiniteMetricView FiniteMetricView::restricted(std::span<const std::size_t> indices) const {
  const std::size_t n = indices.size();
  std::vector<double> m(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m[a * n + b] = distance(indices[a], indices[b]);
  }
  std::vector<Hypothesis> items;
  if (!items_.empty()) {
    for (std::size_t i : indices) items.push_back(items_[i]);
  }
  return FiniteMetricView(Trusted{}, n, std::move(m), std::move(items));
}

FiniteMetricView empirical_view(std::span<const Hypothesis> hypotheses, std::span<const Instance> sample) {
  if (sample.empty()) throw PreconditionError("empirical view needs a nonempty sample");
  return FiniteMetricView::from_table(label_table(hypotheses, sample),
                                      std::vector<Hypothesis>(hypotheses.begin(), hypotheses.end()));
}

FiniteMetricView base_measure_view(std::span<const Hypothesis> hypotheses, const BaseMeasure& grid) {
  if (!grid.is_grid()) throw DomainError("exact d_mu views need a grid base measure");
  std::vector<Instance> cells;
  cells.reserve(grid.cells());
  for (std::uint64_t i = grid.first_index(); i <= grid.last_index(); ++i) cells.push_back(grid.make(i));
  return FiniteMetricView::from_table(label_table(hypotheses, cells),
                                      std::vector<Hypothesis>(hypotheses.begin(), hypotheses.end()));
}

double empirical_distance(const Hypothesis& h1, const Hypothesis& h2, std::span<const Instance> sample) {
  if (sample.empty()) throw PreconditionError("empirical distance needs a nonempty sample");
  std::size_t count = 0;
  for (const auto& x : sample) count += h1(x) != h2(x);
  return static_cast<double>(count) / static_cast<double>(sample.size());
}

DistanceEstimate d_mu_estimate(const Hypothesis& h1, const Hypothesis& h2, const BaseMeasure& mu,
                               std::size_t n_samples, Rng& rng) {
  if (mu.is_grid()) {
    std::size_t count = 0;
    for (std::uint64_t i = mu.first_index(); i <= mu.last_index(); ++i) {
      const Instance x = mu.make(i);
      count += h1(x) != h2(x);
    }
    return {static_cast<double>(count) / static_cast<double>(mu.cells()), 0.0, true, mu.cells()};
  }
  if (n_samples == 0) throw PreconditionError("Monte-Carlo d_mu needs at least one draw");
  std::size_t count = 0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    const Instance x = mu.sample(rng);
    count += h1(x) != h2(x);
  }
  const double p = static_cast<double>(count) / static_cast<double>(n_samples);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples)), false, n_samples};
}

nlohmann::json to_json(const FiniteMetricView& view) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < view.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < view.size(); ++j) row.push_back(view.distance(i, j));
    rows.push_back(std::move(row));
  }
  nlohmann::json j{{"size", view.size()}, {"distance", std::move(rows)}};
  if (!view.items().empty()) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& h : view.items()) items.push_back(json_io::to_json(h));
    j["items"] = std::move(items);
  }
  return j;
}

FiniteMetricView view_from_json(const nlohmann::json& j) {
  const auto n = json_io::require(j, "size").get<std::size_t>();
  const auto& rows = json_io::require(j, "distance");
  std::vector<double> m;
  m.reserve(n * n);
  for (const auto& row : rows) {
    for (const auto& v : row) m.push_back(v.get<double>());
  }
  std::vector<Hypothesis> items;
  if (j.contains("items")) {
    for (const auto& h : j.at("items")) items.push_back(json_io::hypothesis_from_json(h));
  }
  return FiniteMetricView(n, std::move(m), std::move(items));
}

}  // namespace smoothlab::covering
