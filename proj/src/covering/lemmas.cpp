#include "smoothlab/covering/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "smoothlab/classes/hypothesis.hpp"
#include "smoothlab/core/measure.hpp"
#include "smoothlab/covering/bounds.hpp"
#include "smoothlab/covering/cover.hpp"
#include "smoothlab/covering/dimension.hpp"
#include "smoothlab/covering/metric.hpp"

namespace smoothlab::covering {

namespace {

constexpr std::size_t kKeptFailures = 5;

class Tally {
 public:
  explicit Tally(LemmaCheck& c) : c_(c) { c_.min_slack = std::numeric_limits<double>::infinity(); }

  void compare(double lhs, double rhs, double tolerance, const std::string& what) {
    ++c_.comparisons;
    c_.min_slack = std::min(c_.min_slack, rhs - lhs);
    if (lhs > rhs + tolerance) {
      ++c_.violations;
      if (c_.failures.size() < kKeptFailures) {
        std::ostringstream os;
        os << what << ": " << lhs << " > " << rhs;
        c_.failures.push_back(os.str());
      }
    }
  }

 private:
  LemmaCheck& c_;
};

std::size_t between(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform_between(lo, hi));
}

LabelTable random_table(Rng& rng, std::size_t rows, std::size_t points, std::size_t labels) {
  LabelTable t;
  t.rows.assign(rows, std::vector<std::uint32_t>(points));
  for (auto& row : t.rows) {
    for (auto& v : row) v = static_cast<std::uint32_t>(rng.uniform_below(labels));
  }
  return t;
}

std::vector<double> random_weights(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& v : w) {
    v = -std::log1p(-rng.uniform01());
    sum += v;
  }
  for (auto& v : w) v /= sum;
  return w;
}

LemmaCheck named(std::string name, std::string claim) {
  LemmaCheck c;
  c.name = std::move(name);
  c.claim = std::move(claim);
  return c;
}

std::string at_eps(const char* what, double eps) {
  std::ostringstream os;
  os << what << " at eps=" << eps;
  return os.str();
}

// All count vectors of n items into k cells.
void compositions(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == k) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t c = 0; c <= n; ++c) {
    cur.push_back(c);
    compositions(n - c, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

LemmaCheck check_covering_packing_duality(Rng& rng, std::size_t instances, const LemmaShape& shape) {
  auto c = named("covering_packing_duality", "M(2eps) <= N(eps) <= M(eps)");
  Tally tally(c);
  for (std::size_t i = 0; i < instances; ++i) {
    auto t = random_table(rng, between(rng, 1, shape.max_class), between(rng, 1, shape.max_points),
                          between(rng, 2, shape.max_labels));
    if (rng.coin()) t.weights = random_weights(rng, t.points());
    const auto view = FiniteMetricView::from_table(t);
    for (double eps : shape.eps_grid) {
      const double n = static_cast<double>(exact_cover_number(view, eps));
      tally.compare(static_cast<double>(exact_packing_number(view, 2.0 * eps)), n, 0.0, at_eps("M(2eps) <= N(eps)", eps));
      tally.compare(n, static_cast<double>(exact_packing_number(view, eps)), 0.0, at_eps("N(eps) <= M(eps)", eps));
    }
    ++c.instances;
  }
  return c;
}

LemmaCheck check_symmetric_difference_cover(Rng& rng, std::size_t instances, const LemmaShape& shape) {
  auto c = named("symmetric_difference_cover", "N(eps, H delta H, d_n) <= N(eps/2, H, d_n)^2");
  Tally tally(c);
  const std::size_t max_class = std::min<std::size_t>(shape.max_class, 6);
  for (std::size_t i = 0; i < instances; ++i) {
    const auto t = random_table(rng, between(rng, 1, max_class), between(rng, 1, shape.max_points),
                                between(rng, 2, shape.max_labels));
    const auto h = FiniteMetricView::from_table(t);
    const auto delta = FiniteMetricView::from_table(symmetric_difference_table(t));
    for (double eps : shape.eps_grid) {
      const double half = static_cast<double>(exact_cover_number(h, eps / 2.0));
      tally.compare(static_cast<double>(exact_cover_number(delta, eps)), half * half, 0.0, at_eps("HdH cover", eps));
    }
    ++c.instances;
  }
  return c;
}

LemmaCheck check_discretization_bound(Rng& rng, std::size_t instances, const LemmaShape& shape) {
  auto c = named("discretization_bound", "R(F, x_1:n) <= inf_eps { eps + sup_f sqrt(E f^2) sqrt(2 ln N(eps, F, rho) / n) }");
  Tally tally(c);
  const std::size_t max_points = std::min(shape.max_points, kRademacherPointLimit);
  for (std::size_t i = 0; i < instances; ++i) {
    LabelTable t;
    if (i % 2 == 0) {
      t = random_table(rng, between(rng, 1, shape.max_class), between(rng, 1, max_points), 2);
    } else {
      // Symmetric differences of a small multiclass class, as in the regret analysis.
      t = symmetric_difference_table(
          random_table(rng, between(rng, 1, std::min<std::size_t>(shape.max_class, 5)), between(rng, 1, max_points),
                       between(rng, 2, shape.max_labels)));
    }
    tally.compare(rademacher_exact(t), discretization_bound(t, shape.eps_grid).value, 1e-12, "Rademacher");
    ++c.instances;
  }
  return c;
}

LemmaCheck check_haussler_bound(Rng& rng, std::size_t instances, const LemmaShape& shape) {
  auto c = named("haussler_packing", "N(eps, H, d) <= (41/eps)^VC(H)");
  Tally tally(c);
  std::vector<double> eps_list{0.05, 0.1, 0.2};
  for (double e : shape.eps_grid) {
    if (std::find(eps_list.begin(), eps_list.end(), e) == eps_list.end()) eps_list.push_back(e);
  }
  const auto grid = BaseMeasure::uniform_grid(8);
  const auto thresholds = classes::grid_thresholds(8);
  std::vector<Instance> cells;
  for (std::uint64_t k = grid.first_index(); k <= grid.last_index(); ++k) cells.push_back(grid.make(k));
  const auto threshold_table = binary_table(thresholds, cells);
  // VC dimension of the thresholds, brute-forced on the first 16 cells.
  LabelTable head;
  for (const auto& row : threshold_table.rows) head.rows.emplace_back(row.begin(), row.begin() + 16);
  const std::size_t threshold_vc = vc_dimension(head);

  for (std::size_t i = 0; i < instances; ++i) {
    if (i % 2 == 0) {
      LabelTable t = threshold_table;
      if (i > 0) t.weights = random_weights(rng, cells.size());
      const auto view = FiniteMetricView::from_table(t);
      for (double eps : eps_list) {
        tally.compare(static_cast<double>(cover_number_bounds(view, eps).upper), haussler_bound(eps, threshold_vc), 0.0,
                      at_eps("thresholds on 64 cells", eps));
      }
    } else {
      const auto t = random_table(rng, between(rng, 1, shape.max_class), between(rng, 1, shape.max_points), 2);
      const auto view = FiniteMetricView::from_table(t);
      const std::size_t vc = vc_dimension(t);
      for (double eps : eps_list) {
        tally.compare(static_cast<double>(exact_cover_number(view, eps)), haussler_bound(eps, vc), 0.0,
                      at_eps("random binary class", eps));
      }
    }
    ++c.instances;
  }
  return c;
}

LemmaCheck check_loss_class_cover(Rng& rng, std::size_t instances, const LemmaShape& shape) {
  auto c = named("loss_class_cover", "sup_n sup_x N(eps, H, d_n) <= sup_mu N(2eps/|Y|, loss o H, d_mu) and N(eps, loss o H, d_mu) <= (41/eps)^G");
  Tally tally(c);
  constexpr std::size_t kDomain = 3;
  constexpr std::size_t kMaxSample = 4;
  constexpr std::size_t kJointGrid = 3;
  const std::size_t max_class = std::min<std::size_t>(shape.max_class, 8);
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t labels = between(rng, 2, std::max<std::size_t>(2, shape.max_labels));
    const auto h = random_table(rng, between(rng, 1, max_class), kDomain, labels);
    const std::size_t g = graph_dimension(h, labels);
    const auto loss = loss_table(h, labels);

    // Empirical measures of samples of size 1..kMaxSample over the domain.
    std::vector<std::vector<double>> empirical;
    for (std::size_t n = 1; n <= kMaxSample; ++n) {
      std::vector<std::vector<std::size_t>> counts;
      std::vector<std::size_t> cur;
      compositions(n, kDomain, cur, counts);
      for (const auto& cnt : counts) {
        std::vector<double> w;
        for (auto k : cnt) w.push_back(static_cast<double>(k) / static_cast<double>(n));
        empirical.push_back(std::move(w));
      }
    }
    // Joint measures: the grid of masses in multiples of 1/kJointGrid plus
    // each empirical measure times the uniform label distribution.
    std::vector<std::vector<double>> joint;
    {
      std::vector<std::vector<std::size_t>> counts;
      std::vector<std::size_t> cur;
      compositions(kJointGrid, kDomain * labels, cur, counts);
      for (const auto& cnt : counts) {
        std::vector<double> w;
        for (auto k : cnt) w.push_back(static_cast<double>(k) / static_cast<double>(kJointGrid));
        joint.push_back(std::move(w));
      }
    }
    for (const auto& e : empirical) {
      std::vector<double> w;
      for (double p : e) {
        for (std::size_t y = 0; y < labels; ++y) w.push_back(p / static_cast<double>(labels));
      }
      joint.push_back(std::move(w));
    }

    for (double eps : shape.eps_grid) {
      double lhs = 0.0;
      for (const auto& w : empirical) {
        LabelTable t = h;
        t.weights = w;
        lhs = std::max(lhs, static_cast<double>(exact_cover_number(FiniteMetricView::from_table(t), eps)));
      }
      const double scaled = 2.0 * eps / static_cast<double>(labels);
      double rhs = 0.0;
      for (const auto& w : joint) {
        LabelTable t = loss;
        t.weights = w;
        const auto view = FiniteMetricView::from_table(t);
        rhs = std::max(rhs, static_cast<double>(exact_cover_number(view, scaled)));
        tally.compare(static_cast<double>(exact_cover_number(view, eps)), haussler_bound(eps, g), 0.0,
                      at_eps("loss class vs (41/eps)^G", eps));
      }
      tally.compare(lhs, rhs, 0.0, at_eps("empirical sup vs loss-class sup", eps));
    }
    ++c.instances;
  }
  return c;
}

LemmaCheck check_metric_entropy_from_empirical(Rng& rng, std::size_t instances, const LemmaShape& shape) {
  auto c = named("metric_entropy_from_empirical", "N(eps, H, d_mu) <= sup_m E[N(eps/2, H, d_m)]");
  Tally tally(c);
  constexpr std::size_t kTrials = 24;
  const std::size_t sample_sizes[] = {16, 64, 256};
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t side = between(rng, 2, 4);
    const std::size_t cells = side * side;
    const auto h = random_table(rng, between(rng, 1, shape.max_class), cells, 2);
    const auto base = FiniteMetricView::from_table(h);
    std::vector<double> best_mean(shape.eps_grid.size(), 0.0);
    std::vector<double> best_se(shape.eps_grid.size(), 0.0);
    for (std::size_t m : sample_sizes) {
      std::vector<std::vector<double>> counts(shape.eps_grid.size());
      for (std::size_t trial = 0; trial < kTrials; ++trial) {
        LabelTable sample;
        sample.rows.assign(h.functions(), std::vector<std::uint32_t>(m));
        for (std::size_t k = 0; k < m; ++k) {
          const auto cell = rng.uniform_below(cells);
          for (std::size_t r = 0; r < h.functions(); ++r) sample.rows[r][k] = h.rows[r][cell];
        }
        const auto view = FiniteMetricView::from_table(sample);
        for (std::size_t e = 0; e < shape.eps_grid.size(); ++e) {
          counts[e].push_back(static_cast<double>(exact_cover_number(view, shape.eps_grid[e] / 2.0)));
        }
      }
      for (std::size_t e = 0; e < counts.size(); ++e) {
        double mean = 0.0;
        for (double v : counts[e]) mean += v;
        mean /= kTrials;
        double var = 0.0;
        for (double v : counts[e]) var += (v - mean) * (v - mean);
        const double se = std::sqrt(var / (kTrials - 1) / kTrials);
        if (mean > best_mean[e]) {
          best_mean[e] = mean;
          best_se[e] = se;
        }
      }
    }
    for (std::size_t e = 0; e < shape.eps_grid.size(); ++e) {
      tally.compare(static_cast<double>(exact_cover_number(base, shape.eps_grid[e])), best_mean[e] + 3.0 * best_se[e],
                    1e-9, at_eps("d_mu cover vs empirical half-scale", shape.eps_grid[e]));
    }
    ++c.instances;
  }
  return c;
}

nlohmann::json to_json(const LemmaCheck& c) {
  return {{"name", c.name},          {"claim", c.claim},         {"instances", c.instances},
          {"comparisons", c.comparisons}, {"violations", c.violations}, {"min_slack", c.min_slack},
          {"failures", c.failures},  {"passed", c.passed()}};
}

}  // namespace smoothlab::covering
