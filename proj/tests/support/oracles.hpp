#pragma once

// Independent reference computations for the unit and acceptance tests.
// These deliberately avoid the library's own algorithms: plain subset
// enumeration, direct formulas, and from-scratch recomputation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;
using Table = std::vector<std::vector<std::uint32_t>>;

inline constexpr double kTol = 1e-12;

// Hamming fraction between two rows, optionally weighted.
inline double row_distance(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           const std::vector<double>& w = {}) {
  if (w.empty()) {
    int diff = 0;
    for (std::size_t k = 0; k < a.size(); ++k) diff += a[k] != b[k];
    return static_cast<double>(diff) / static_cast<double>(a.size());
  }
  long double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) s += w[k];
  }
  return static_cast<double>(s);
}

inline Matrix distances(const Table& t, const std::vector<double>& w = {}) {
  Matrix m(t.size(), std::vector<double>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) m[i][j] = row_distance(t[i], t[j], w);
  }
  return m;
}

// Smallest k such that some k-subset covers everything, by trying every
// subset of the items. Exponential; keep items <= 14.
inline std::size_t cover_number(const Matrix& d, double eps) {
  const std::size_t n = d.size();
  if (n == 0) return 0;
  std::size_t best = n;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size >= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      bool hit = false;
      for (std::size_t c = 0; c < n; ++c) {
        if ((s >> c & 1u) && d[c][i] <= eps + kTol) hit = true;
      }
      ok = hit;
    }
    if (ok) best = size;
  }
  return best;
}

// Largest subset with all pairwise distances > eps.
inline std::size_t packing_number(const Matrix& d, double eps) {
  const std::size_t n = d.size();
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if ((s >> i & 1u) && (s >> j & 1u) && d[i][j] <= eps + kTol) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Largest shattered column subset of a 0/1 table, trying every subset.
inline std::size_t vc_dimension(const Table& t) {
  if (t.empty()) return 0;
  const std::size_t n = t.front().size();
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(s));
    if (k <= best) continue;
    std::set<std::vector<std::uint32_t>> patterns;
    for (const auto& row : t) {
      std::vector<std::uint32_t> p;
      for (std::size_t c = 0; c < n; ++c) {
        if (s >> c & 1u) p.push_back(row[c]);
      }
      patterns.insert(p);
    }
    if (patterns.size() == (std::size_t{1} << k)) best = k;
  }
  return best;
}

// (1/n) E_tau max_f sum_i tau_i f_i, averaging over all sign vectors.
inline double rademacher(const Table& t) {
  const std::size_t n = t.front().size();
  double total = 0.0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    double best = -1e300;
    for (const auto& row : t) {
      double v = 0.0;
      for (std::size_t i = 0; i < n; ++i) v += (s >> i & 1u ? 1.0 : -1.0) * row[i];
      best = std::max(best, v);
    }
    total += best;
  }
  return total / std::pow(2.0, static_cast<double>(n)) / static_cast<double>(n);
}

// Exponential-weights selection probabilities from cumulative losses,
// recomputed from scratch.
inline std::vector<double> rewa_probabilities(const std::vector<double>& cumulative_loss, double eta) {
  double lo = *std::min_element(cumulative_loss.begin(), cumulative_loss.end());
  std::vector<double> p;
  double z = 0.0;
  for (double l : cumulative_loss) {
    p.push_back(std::exp(-eta * (l - lo)));
    z += p.back();
  }
  for (double& v : p) v /= z;
  return p;
}

// P[x_1..x_m distinct] for m uniform draws from c cells.
inline double distinct_probability(std::size_t m, std::size_t cells) {
  double p = 1.0;
  for (std::size_t i = 1; i < m; ++i) p *= 1.0 - static_cast<double>(i) / static_cast<double>(cells);
  return p;
}

inline double pac_bound(double n, double k, double delta) {
  return 100.0 * std::sqrt((k * std::log(n / k) + k + std::log(1.0 / delta)) / n);
}

inline double regret_bound(double T, double sigma, double eps, double c) {
  return 6.0 * (eps * T / sigma + std::sqrt(T * std::log(c)));
}

}  // namespace oracle
