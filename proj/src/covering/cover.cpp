#include "smoothlab/covering/cover.hpp"

#include <bit>
#include <cstdint>

#include "smoothlab/core/errors.hpp"

namespace smoothlab::covering {

namespace {

bool within(double d, double eps) { return d <= eps + kDistanceTolerance; }

using Mask = std::uint32_t;

std::vector<Mask> ball_masks(const FiniteMetricView& v, double eps) {
  std::vector<Mask> balls(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (within(v.distance(i, j), eps)) balls[i] |= Mask{1} << j;
    }
  }
  return balls;
}

FiniteMetricView gated(const FiniteMetricView& view, const char* what) {
  auto d = view.deduplicated();
  if (d.size() > kExactItemLimit) {
    throw PreconditionError(std::string(what) + " is limited to " + std::to_string(kExactItemLimit) +
                            " distinct items (got " + std::to_string(d.size()) + ")");
  }
  return d;
}

bool cover_within(std::size_t budget, Mask uncovered, const std::vector<Mask>& balls, int widest) {
  if (uncovered == 0) return true;
  if (budget == 0) return false;
  if (static_cast<std::size_t>(std::popcount(uncovered)) > budget * static_cast<std::size_t>(widest)) return false;
  const int u = std::countr_zero(uncovered);
  // Some center must cover u, and the centers covering u are exactly ball(u).
  for (Mask cands = balls[u]; cands; cands &= cands - 1) {
    const int c = std::countr_zero(cands);
    if (cover_within(budget - 1, uncovered & ~balls[c], balls, widest)) return true;
  }
  return false;
}

std::size_t max_independent(Mask live, const std::vector<Mask>& conflicts) {
  if (live == 0) return 0;
  const int v = std::countr_zero(live);
  const Mask bit = Mask{1} << v;
  const std::size_t take = 1 + max_independent(live & ~conflicts[v] & ~bit, conflicts);
  if ((conflicts[v] & live & ~bit) == 0) return take;
  return std::max(take, max_independent(live & ~bit, conflicts));
}

}  // namespace

bool is_cover(const FiniteMetricView& view, const std::vector<std::size_t>& centers, double eps) {
  for (std::size_t i = 0; i < view.size(); ++i) {
    bool hit = false;
    for (std::size_t c : centers) {
      if (within(view.distance(c, i), eps)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool is_packing(const FiniteMetricView& view, const std::vector<std::size_t>& chosen, double eps) {
  for (std::size_t a = 0; a < chosen.size(); ++a) {
    for (std::size_t b = a + 1; b < chosen.size(); ++b) {
      if (chosen[a] == chosen[b] || within(view.distance(chosen[a], chosen[b]), eps)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> greedy_cover(const FiniteMetricView& view, double eps) {
  const std::size_t n = view.size();
  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  std::vector<std::size_t> centers;
  while (remaining > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t gain = 0;
      for (std::size_t i = 0; i < n; ++i) gain += !covered[i] && within(view.distance(c, i), eps);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    centers.push_back(best);
    for (std::size_t i = 0; i < n; ++i) {
      if (!covered[i] && within(view.distance(best, i), eps)) {
        covered[i] = 1;
        --remaining;
      }
    }
  }
  return centers;
}

std::vector<std::size_t> maximal_packing(const FiniteMetricView& view, double eps) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < view.size(); ++i) {
    bool far = true;
    for (std::size_t k : kept) {
      if (within(view.distance(k, i), eps)) {
        far = false;
        break;
      }
    }
    if (far) kept.push_back(i);
  }
  return kept;
}

std::size_t exact_cover_number(const FiniteMetricView& view, double eps) {
  const auto v = gated(view, "exact covering number");
  if (v.size() == 0) return 0;
  const auto balls = ball_masks(v, eps);
  int widest = 0;
  for (Mask b : balls) widest = std::max(widest, std::popcount(b));
  const Mask all = v.size() == 32 ? ~Mask{0} : (Mask{1} << v.size()) - 1;
  for (std::size_t k = 1;; ++k) {
    if (cover_within(k, all, balls, widest)) return k;
  }
}

std::size_t exact_packing_number(const FiniteMetricView& view, double eps) {
  const auto v = gated(view, "exact packing number");
  auto conflicts = ball_masks(v, eps);
  const Mask all = (Mask{1} << v.size()) - 1;
  return max_independent(all, conflicts);
}

CoverNumberBounds cover_number_bounds(const FiniteMetricView& view, double eps) {
  const auto v = view.deduplicated();
  if (v.size() <= kExactItemLimit) {
    const auto n = exact_cover_number(v, eps);
    return {n, n, true};
  }
  // Duplicates change the greedy gains, so both runs are valid upper bounds.
  const auto upper = std::min(greedy_cover(v, eps).size(), greedy_cover(view, eps).size());
  return {maximal_packing(v, 2.0 * eps).size(), upper, false};
}

}  // namespace smoothlab::covering
