#include "smoothlab/covering/dimension.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "smoothlab/core/errors.hpp"

namespace smoothlab::covering {

namespace {

void require_binary(const LabelTable& t, const char* what) {
  for (const auto& row : t.rows) {
    for (auto v : row) {
      if (v > 1) throw PreconditionError(std::string(what) + " needs a {0,1}-valued table");
    }
  }
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool shatters(const LabelTable& binary, const std::vector<std::size_t>& columns) {
  const std::size_t k = columns.size();
  if (k >= 32) return false;
  const std::size_t need = std::size_t{1} << k;
  if (binary.functions() < need) return false;
  std::unordered_set<std::uint32_t> seen;
  for (const auto& row : binary.rows) {
    std::uint32_t pattern = 0;
    for (std::size_t b = 0; b < k; ++b) pattern |= (row[columns[b]] & 1u) << b;
    seen.insert(pattern);
    if (seen.size() == need) return true;
  }
  return false;
}

std::size_t vc_dimension(const LabelTable& binary) {
  require_binary(binary, "VC dimension");
  const std::size_t n = binary.points();
  if (n > kVcPointLimit) {
    throw PreconditionError("VC dimension brute force is limited to " + std::to_string(kVcPointLimit) + " points");
  }
  std::size_t best = 0;
  // Subsets of a shattered set are shattered, so sizes can be tried upward.
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    bool found = false;
    do {
      if (shatters(binary, cols)) {
        found = true;
        break;
      }
    } while (next_combination(cols, n));
    if (!found) break;
    best = k;
  }
  return best;
}

LabelTable loss_table(const LabelTable& table, std::size_t label_count) {
  LabelTable out;
  for (const auto& row : table.rows) {
    std::vector<std::uint32_t> r;
    r.reserve(row.size() * label_count);
    for (auto v : row) {
      if (v >= label_count) throw PreconditionError("label code outside the declared label set");
      for (std::size_t y = 0; y < label_count; ++y) r.push_back(v != y ? 1u : 0u);
    }
    out.rows.push_back(std::move(r));
  }
  if (!table.weights.empty()) {
    for (double w : table.weights) {
      for (std::size_t y = 0; y < label_count; ++y) out.weights.push_back(w / static_cast<double>(label_count));
    }
  }
  return out;
}

std::size_t graph_dimension(const LabelTable& table, std::size_t label_count) {
  if (table.points() * label_count > kVcPointLimit) {
    throw PreconditionError("graph dimension brute force is limited to " + std::to_string(kVcPointLimit) +
                            " (point, label) pairs");
  }
  return vc_dimension(loss_table(table, label_count));
}

LabelTable symmetric_difference_table(const LabelTable& table) {
  LabelTable out;
  out.weights = table.weights;
  for (std::size_t i = 0; i < table.functions(); ++i) {
    for (std::size_t j = i; j < table.functions(); ++j) {
      std::vector<std::uint32_t> r(table.points());
      for (std::size_t k = 0; k < r.size(); ++k) r[k] = table.rows[i][k] != table.rows[j][k] ? 1u : 0u;
      out.rows.push_back(std::move(r));
    }
  }
  return out;
}

double rademacher_exact(const LabelTable& binary) {
  require_binary(binary, "Rademacher complexity");
  const std::size_t n = binary.points();
  if (n == 0 || binary.functions() == 0) throw PreconditionError("Rademacher complexity needs points and functions");
  if (n > kRademacherPointLimit) {
    throw PreconditionError("exact Rademacher complexity is limited to " + std::to_string(kRademacherPointLimit) +
                            " points");
  }
  // Sum over sign vectors of max_f sum_i tau_i f_i, all integers.
  std::int64_t total = 0;
  for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
    std::int64_t best = INT64_MIN;
    for (const auto& row : binary.rows) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (row[i]) s += (signs >> i) & 1u ? 1 : -1;
      }
      best = std::max(best, s);
    }
    total += best;
  }
  return static_cast<double>(total) / static_cast<double>(std::int64_t{1} << n) / static_cast<double>(n);
}

}  // namespace smoothlab::covering
