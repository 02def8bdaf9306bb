#pragma once

// Occurrence semantics for the unified pattern type.
//
// An occurrence of (p, C) in pi is a pair of order-preserving injections
// alpha (columns) and beta (rows) such that the points (alpha(i), beta(j)) for
// (i, j) in G(p) lie on G(pi), and for every region constraint the entries of
// pi inside C' = union of R_ij satisfy it, where
//
//   R_ij = [alpha(i)+1, alpha(i+1)-1] x [beta(j)+1, beta(j+1)-1],
//   alpha(0) = beta(0) = 0,  alpha(k+1) = beta(k+1) = n+1.

#include "meshkit/pattern.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace meshkit {

struct Occurrence {
  std::vector<int> positions;  // alpha(1) < ... < alpha(k)
  std::vector<int> values;     // beta(1) < ... < beta(k)
  bool operator==(const Occurrence&) const = default;
};

/// All occurrences, ordered lexicographically by positions.
std::vector<Occurrence> occurrences(const Pattern& pat, const Permutation& p);
std::vector<Occurrence> occurrences(const Pattern& pat, std::span<const int> word);

/// Number of occurrences without materializing them.
std::int64_t count_occurrences(const Pattern& pat, std::span<const int> word);

/// Calls `visit` for each occurrence in order; stops early when it returns
/// false. Returns false iff stopped early.
bool for_each_occurrence(const Pattern& pat, std::span<const int> word,
                         const std::function<bool(const Occurrence&)>& visit);

bool contains(const Pattern& pat, std::span<const int> word);
bool contains(const Pattern& pat, const Permutation& p);

/// Standardizes `ps` by coordinate ranks and tests containment.
bool pointset_contains(const PointSet& ps, const Pattern& pat);

bool avoids_all(std::span<const Pattern> pats, std::span<const int> word);
bool avoids_all(std::span<const Pattern> pats, const Permutation& p);

/// Containment read literally from the barred-pattern definition: some
/// occurrence of the unbarred entries cannot be extended to an occurrence of
/// the whole word. Only single-bar patterns are supported; any other bar count
/// throws std::invalid_argument.
bool contains(const BarredPattern& pat, std::span<const int> word);
bool contains(const BarredPattern& pat, const Permutation& p);

// ---------------------------------------------------------------------------
// Avoidance classes and pattern-set comparisons

constexpr int kDefaultMaxLength = 10;

struct AvoidanceClass {
  int length = 0;
  std::vector<Permutation> members;  // lexicographic
  std::uint64_t count = 0;
};

/// Av_n(pats). Throws std::out_of_range when n exceeds `max_length`.
AvoidanceClass avoidance_class(int n, std::span<const Pattern> pats, int max_length = kDefaultMaxLength,
                               unsigned workers = 1);

/// Streams Av_n(pats) in lexicographic order without materializing it.
/// Returns the number of members visited.
std::uint64_t for_each_avoider(int n, std::span<const Pattern> pats,
                               const std::function<void(const Permutation&)>& visit,
                               int max_length = kDefaultMaxLength);

std::uint64_t count_avoiders(int n, std::span<const Pattern> pats, unsigned workers = 1);

struct EquivalenceResult {
  bool equivalent = true;
  /// Smallest permutation (by length, then lexicographically) in exactly one
  /// of the two classes.
  std::optional<Permutation> counterexample;
};

/// Whether Av_n(a) = Av_n(b) for all n <= n_max.
EquivalenceResult equivalent_on(std::span<const Pattern> a, std::span<const Pattern> b, int n_max,
                                unsigned workers = 1);

/// Whether every permutation of length <= n_max containing `strong` also
/// contains `weak`.
bool implies_containment(const Pattern& strong, const Pattern& weak, int n_max, unsigned workers = 1);

/// Smallest permutation of length <= n_max containing `strong` but not
/// `weak`, if any.
std::optional<Permutation> containment_counterexample(const Pattern& strong, const Pattern& weak, int n_max,
                                                      unsigned workers = 1);

}  // namespace meshkit
