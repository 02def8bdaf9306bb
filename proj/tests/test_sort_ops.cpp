#include "oracles.hpp"

#include "meshkit/sort_ops.hpp"

#include <doctest.h>

using namespace meshkit;

TEST_CASE("single passes") {
  CHECK(stack_sort_once(Permutation{2, 3, 1}) == Permutation({2, 1, 3}));
  CHECK(stack_sort_once(Permutation{3, 1, 2}) == Permutation({1, 2, 3}));
  CHECK(bubble_once(Permutation{5, 2, 1, 6, 3, 4}) == Permutation({2, 1, 5, 3, 4, 6}));
  CHECK(bubble_once(Permutation{5, 2, 1, 3, 4}) == Permutation({2, 1, 3, 4, 5}));
  CHECK(stack_sort_once(Permutation()) == Permutation());
}

TEST_CASE("iterated passes") {
  CHECK(stack_sort_k(Permutation{2, 3, 4, 1}, 1) == Permutation({2, 3, 1, 4}));
  CHECK(stack_sort_k(Permutation{2, 3, 4, 1}, 2) == Permutation({2, 1, 3, 4}));
  CHECK(stack_sort_k(Permutation{2, 3, 4, 1}, 3).is_identity());
  CHECK(stack_sort_k(Permutation{2, 1}, 0) == Permutation({2, 1}));
  CHECK(bubble_k(Permutation{4, 3, 2, 1}, 3).is_identity());
  CHECK_FALSE(bubble_k(Permutation{4, 3, 2, 1}, 2).is_identity());
  CHECK(is_west_k_sortable(Permutation{2, 3, 4, 1}, 3));
  CHECK_FALSE(is_west_k_sortable(Permutation{2, 3, 4, 1}, 2));
  CHECK_THROWS_AS(apply_operator(SortOperator::Stack, Permutation{1}, -1), std::invalid_argument);
}

TEST_CASE("operators match their recursive definitions") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      const Permutation p(w);
      REQUIRE(stack_sort_once(p).values() == oracle::stack_sort_recursive(w));
      REQUIRE(bubble_once(p).values() == oracle::bubble_recursive(w));
    }
  }
}

TEST_CASE("traces map outputs to input positions") {
  const Permutation p{2, 3, 4, 1};
  const SortTrace t = trace_stack_sort(p);
  CHECK(t.output == Permutation({2, 3, 1, 4}));
  CHECK(t.source == std::vector<int>{1, 2, 4, 3});
  for (SortOperator op : {SortOperator::Stack, SortOperator::Bubble}) {
    for (const auto& w : oracle::all_permutations(6)) {
      const Permutation q(w);
      const SortTrace tr = trace(op, q);
      REQUIRE(tr.output == apply_operator(op, q));
      for (int i = 1; i <= q.size(); ++i) REQUIRE(q(tr.source[static_cast<std::size_t>(i - 1)]) == tr.output(i));
    }
  }
}

TEST_CASE("operator names") {
  CHECK(parse_sort_operator("stack") == SortOperator::Stack);
  CHECK(parse_sort_operator("bubble") == SortOperator::Bubble);
  CHECK(to_string(SortOperator::Bubble) == "bubble");
  CHECK_THROWS_AS(parse_sort_operator("heap"), std::invalid_argument);
}

TEST_CASE("sorted_by agrees with repeated application") {
  for (const auto& w : oracle::all_permutations(6)) {
    const Permutation p(w);
    for (int k = 0; k <= 3; ++k) {
      REQUIRE(sorted_by(SortOperator::Stack, w, k) == stack_sort_k(p, k).is_identity());
      REQUIRE(sorted_by(SortOperator::Bubble, w, k) == bubble_k(p, k).is_identity());
    }
  }
}
