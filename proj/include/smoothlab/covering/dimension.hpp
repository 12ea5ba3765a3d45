#pragma once

#include <cstddef>
#include <vector>

#include "smoothlab/covering/metric.hpp"

namespace smoothlab::covering {

inline constexpr std::size_t kVcPointLimit = 24;
inline constexpr std::size_t kRademacherPointLimit = 12;

// Whether the {0,1} table realizes all 2^|subset| patterns on the columns.
bool shatters(const LabelTable& binary, const std::vector<std::size_t>& columns);

// Size of the largest shattered column set. PreconditionError if a code is
// not 0/1 or the table has more than kVcPointLimit columns.
std::size_t vc_dimension(const LabelTable& binary);

// Loss class on X x Y: row h, column (k, y) holds 1{h(x_k) != y} for the
// label codes y = 0..label_count-1. Column order is k-major.
LabelTable loss_table(const LabelTable& table, std::size_t label_count);

// VC dimension of the loss class; PreconditionError when a code is out of
// range or points * label_count exceeds kVcPointLimit.
std::size_t graph_dimension(const LabelTable& table, std::size_t label_count);

// Rows x -> 1{h_i(x) != h_j(x)} for all i <= j, duplicates kept.
LabelTable symmetric_difference_table(const LabelTable& table);

// (1/n) E_tau[max_f sum_i tau_i f(x_i)] by enumerating all 2^n sign vectors.
// PreconditionError beyond kRademacherPointLimit columns or on non-0/1 codes.
double rademacher_exact(const LabelTable& binary);

}  // namespace smoothlab::covering
