#pragma once

// Slow, direct reference implementations used to check the library. None of
// them share code with the production paths beyond the Pattern type itself.

#include "meshkit/pattern.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using meshkit::BarredPattern;
using meshkit::Pattern;

/// Occurrences found by trying every k-subset of positions and scanning all
/// entries of the permutation for every constraint.
std::int64_t naive_count(const Pattern& pat, const std::vector<int>& word);
bool naive_contains(const Pattern& pat, const std::vector<int>& word);

/// Any number of bars: some occurrence of the unbarred entries that no
/// occurrence of the full word extends.
bool naive_barred_contains(const BarredPattern& pat, const std::vector<int>& word);

/// S(L n R) = S(L) S(R) n.
std::vector<int> stack_sort_recursive(const std::vector<int>& word);
/// B(L n R) = B(L) R n.
std::vector<int> bubble_recursive(const std::vector<int>& word);

/// No window of 2..n-1 consecutive positions holds consecutive values.
bool is_simple_by_windows(const std::vector<int>& word);

/// 2(3n)! / ((n+1)! (2n+1)!) with 128-bit factorials; n <= 10.
std::uint64_t west2_by_factorials(int n);

std::vector<std::vector<int>> all_permutations(int n);

/// A random pattern of length 1..max_len. Decorations nest up to `depth`
/// levels.
Pattern random_pattern(std::mt19937_64& rng, int max_len, int depth);

}  // namespace oracle
