#pragma once

// One-pass sorting operators.
//
// stack sort S: scan left to right; before pushing x, pop every stack entry
// smaller than x to the output; pop the rest at the end. The stack is kept
// increasing from the top.
//
// bubble sort B: one left-to-right pass of adjacent swaps, which carries each
// left-to-right maximum rightwards until it meets a larger entry.

#include "meshkit/permutation.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace meshkit {

enum class SortOperator { Stack, Bubble };

std::string_view to_string(SortOperator op);
/// "stack" or "bubble"; throws std::invalid_argument otherwise.
SortOperator parse_sort_operator(std::string_view name);

/// Output of one pass together with map[i] = input position (1-based) of the
/// entry at output position i + 1.
struct SortTrace {
  Permutation output;
  std::vector<int> source;
};

Permutation stack_sort_once(const Permutation& p);
Permutation bubble_once(const Permutation& p);

/// Allocation-free variants writing into `out` (same size as `in`).
void stack_sort_into(std::span<const int> in, std::span<int> out);
void bubble_into(std::span<const int> in, std::span<int> out);

/// k-fold iterates; k = 0 is the identity map.
Permutation stack_sort_k(const Permutation& p, int k);
Permutation bubble_k(const Permutation& p, int k);
Permutation apply_operator(SortOperator op, const Permutation& p, int passes = 1);

bool is_west_k_sortable(const Permutation& p, int k);
/// Whether `passes` applications of `op` sort `word`.
bool sorted_by(SortOperator op, std::span<const int> word, int passes);

SortTrace trace_stack_sort(const Permutation& p);
SortTrace trace_bubble(const Permutation& p);
SortTrace trace(SortOperator op, const Permutation& p);

}  // namespace meshkit
