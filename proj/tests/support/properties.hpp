#pragma once

// Exhaustive and randomized property checks. Each returns an empty optional on
// success or a description of the first failure. Both the unit tests and the
// acceptance binary run them.

#include <cstdint>
#include <optional>
#include <string>

namespace props {

using Failure = std::optional<std::string>;

/// print(parse(print(p))) == print(p) and parse(print(p)) == p for `count`
/// random patterns with decorations nested up to `depth` levels.
Failure parse_print_roundtrip(int count = 1000, int depth = 3, std::uint64_t seed = 20261015);

/// contains(s(pat), s(p)) == contains(pat, p) for all eight symmetries, the
/// fixture patterns of length <= 5 plus random ones, and all p of length <= n_max.
Failure symmetry_equivariance(int n_max = 6, std::uint64_t seed = 7);

/// Iterative stack and bubble passes against their recursive definitions.
Failure operator_recursion(int n_max = 8);

/// a before b with a < b in p keeps a before b after S and after B.
Failure non_inversions_preserved(int n_max = 8);

/// Occurrence counts of every fixture pattern against the subset oracle.
Failure matcher_vs_naive(int n_max = 7);

}  // namespace props
