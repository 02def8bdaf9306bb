#include "meshkit/enumerate.hpp"

#include <doctest.h>

#include <atomic>
#include <stdexcept>

using namespace meshkit;

TEST_CASE("partitions visit S_n in lexicographic order") {
  std::vector<std::vector<int>> seen;
  for_each_permutation(3, [&](std::span<const int> w) {
    seen.emplace_back(w.begin(), w.end());
    return true;
  });
  REQUIRE(seen.size() == 6);
  CHECK(seen.front() == std::vector<int>{1, 2, 3});
  CHECK(seen[1] == std::vector<int>{1, 3, 2});
  CHECK(seen.back() == std::vector<int>{3, 2, 1});
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  int empty = 0;
  for_each_permutation(0, [&](std::span<const int> w) {
    empty += w.empty();
    return true;
  });
  CHECK(empty == 1);
}

TEST_CASE("counts and searches are independent of workers") {
  auto has_descent_at_start = [](std::span<const int> w) { return w.size() > 1 && w[0] > w[1]; };
  for (unsigned workers : {1u, 2u, 5u}) {
    CHECK(count_permutations_if(6, has_descent_at_start, workers) == 360);
    CHECK(first_permutation_if(5, has_descent_at_start, workers) == Permutation({2, 1, 3, 4, 5}));
    const auto cmp = compare_on(
        5, has_descent_at_start, [](std::span<const int> w) { return w[0] > w[4]; }, workers);
    CHECK(cmp.lhs == 60);
    CHECK(cmp.rhs == 60);
    REQUIRE(cmp.first_mismatch);
    CHECK(*cmp.first_mismatch == Permutation({2, 1, 3, 4, 5}));
  }
  CHECK_FALSE(first_permutation_if(4, [](std::span<const int>) { return false; }));
}

TEST_CASE("run_partitions covers every part once and rethrows") {
  std::vector<std::atomic<int>> hits(7);
  run_partitions(7, 3, [&](int part) { ++hits[static_cast<std::size_t>(part)]; });
  for (auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(run_partitions(4, 2, [](int part) {
                    if (part == 2) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
  CHECK(hardware_workers() >= 1);
}
