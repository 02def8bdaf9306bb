#pragma once

// Exhaustive walks over S_n. Every walk is split into n partitions by the
// first letter; partitions may run on separate worker threads and their
// results are merged in partition order, so outcomes do not depend on the
// worker count.

#include "meshkit/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace meshkit {

/// Runs task(0) ... task(parts-1) on up to `workers` threads.
void run_partitions(int parts, unsigned workers, const std::function<void(int)>& task);

/// Worker count to use when the caller asks for "all cores".
unsigned hardware_workers();

/// Visits the permutations of length n whose first letter is `first` in
/// lexicographic order. `visit` returns false to stop.
template <class Visit>
bool for_each_in_partition(int n, int first, Visit&& visit) {
  std::vector<int> w(static_cast<std::size_t>(n));
  w[0] = first;
  int next = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (next == first) ++next;
    w[i] = next++;
  }
  do {
    if (!visit(std::span<const int>(w))) return false;
  } while (std::next_permutation(w.begin() + 1, w.end()));
  return true;
}

/// Visits S_n in lexicographic order; S_0 holds only the empty permutation.
template <class Visit>
bool for_each_permutation(int n, Visit&& visit) {
  if (n == 0) return visit(std::span<const int>());
  for (int first = 1; first <= n; ++first) {
    if (!for_each_in_partition(n, first, visit)) return false;
  }
  return true;
}

template <class Pred>
std::uint64_t count_permutations_if(int n, Pred pred, unsigned workers = 1) {
  if (n == 0) return pred(std::span<const int>()) ? 1 : 0;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  run_partitions(n, workers, [&](int part) {
    std::uint64_t c = 0;
    for_each_in_partition(n, part + 1, [&](std::span<const int> w) {
      if (pred(w)) ++c;
      return true;
    });
    counts[static_cast<std::size_t>(part)] = c;
  });
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

/// Lexicographically first permutation of length n satisfying `pred`.
template <class Pred>
std::optional<Permutation> first_permutation_if(int n, Pred pred, unsigned workers = 1) {
  if (n == 0) {
    if (pred(std::span<const int>())) return Permutation();
    return std::nullopt;
  }
  std::vector<std::optional<Permutation>> found(static_cast<std::size_t>(n));
  run_partitions(n, workers, [&](int part) {
    for_each_in_partition(n, part + 1, [&](std::span<const int> w) {
      if (!pred(w)) return true;
      found[static_cast<std::size_t>(part)] = Permutation(std::vector<int>(w.begin(), w.end()));
      return false;
    });
  });
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

struct SetComparison {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  /// Lexicographically first permutation on which the predicates disagree.
  std::optional<Permutation> first_mismatch;
};

/// Counts both predicates over S_n and finds the first disagreement.
template <class Lhs, class Rhs>
SetComparison compare_on(int n, Lhs lhs, Rhs rhs, unsigned workers = 1) {
  const int parts = std::max(n, 1);
  std::vector<SetComparison> partial(static_cast<std::size_t>(parts));
  auto scan = [&](SetComparison& out, std::span<const int> w) {
    const bool a = lhs(w);
    const bool b = rhs(w);
    out.lhs += a;
    out.rhs += b;
    if (a != b && !out.first_mismatch) out.first_mismatch = Permutation(std::vector<int>(w.begin(), w.end()));
    return true;
  };
  if (n == 0) {
    scan(partial[0], std::span<const int>());
  } else {
    run_partitions(n, workers, [&](int part) {
      auto& out = partial[static_cast<std::size_t>(part)];
      for_each_in_partition(n, part + 1, [&](std::span<const int> w) { return scan(out, w); });
    });
  }
  SetComparison total;
  for (auto& p : partial) {
    total.lhs += p.lhs;
    total.rhs += p.rhs;
    if (!total.first_mismatch && p.first_mismatch) total.first_mismatch = std::move(p.first_mismatch);
  }
  return total;
}

}  // namespace meshkit
