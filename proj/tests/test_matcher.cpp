#include "oracles.hpp"

#include "meshkit/dsl.hpp"
#include "meshkit/matcher.hpp"

#include <doctest.h>

using namespace meshkit;

TEST_CASE("mesh occurrence in 526413") {
  const Pattern pat = parse_pattern("132|sh{(0,2),(1,2),(2,2)}");
  const auto occ = occurrences(pat, Permutation{5, 2, 6, 4, 1, 3});
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].positions == std::vector<int>{2, 4, 6});
  CHECK(occ[0].values == std::vector<int>{2, 3, 4});
  // Classically: 264, 263, 243.
  CHECK(count_occurrences(pat.classical(), std::vector<int>{5, 2, 6, 4, 1, 3}) == 3);
}

TEST_CASE("marked and decorated regions") {
  const Pattern marked = parse_pattern("21|mark{(1,2)}>=1");
  CHECK(contains(marked, Permutation{2, 3, 1}));
  CHECK_FALSE(contains(marked, Permutation{3, 2, 1}));
  CHECK_FALSE(contains(parse_pattern("21|mark{(1,2)}>=2"), Permutation{2, 3, 1}));
  CHECK(contains(parse_pattern("21|mark{(1,2)}>=2"), Permutation{2, 3, 4, 1}));

  const Pattern dec = parse_pattern("21|dec{(1,1)}avoids(12)");
  CHECK(contains(dec, Permutation{4, 3, 2, 1}));
  CHECK(contains(dec, Permutation{4, 2, 3, 1}));  // 4..3 or 2..1 have nothing increasing between
  CHECK(contains(parse_pattern("21|dec{(1,0),(1,1),(1,2)}avoids(12)"), Permutation{3, 1, 2, 4}));
  CHECK_FALSE(contains(parse_pattern("21|mark{(1,1)}>=1|dec{(1,1)}avoids(12)"), Permutation{4, 2, 3, 1}));
  CHECK(contains(parse_pattern("21|mark{(1,1)}>=1|dec{(1,1)}avoids(12)"), Permutation{4, 3, 2, 1}));
}

TEST_CASE("empty pattern and empty permutation") {
  CHECK(contains(Pattern(Permutation()), Permutation()));
  CHECK(contains(Pattern(Permutation()), Permutation{2, 1}));
  CHECK_FALSE(contains(Pattern(Permutation{1}), Permutation()));
  CHECK(count_occurrences(Pattern(Permutation()), std::vector<int>{1, 2}) == 1);
  CHECK_FALSE(contains(parse_pattern("[]|sh{(0,0)}"), Permutation{1}));
  CHECK(contains(parse_pattern("[]|sh{(0,0)}"), Permutation()));
}

TEST_CASE("early stop in for_each_occurrence") {
  int seen = 0;
  const bool finished = for_each_occurrence(Pattern(Permutation{1, 2}), std::vector<int>{1, 2, 3, 4},
                                            [&](const Occurrence&) { return ++seen < 2; });
  CHECK_FALSE(finished);
  CHECK(seen == 2);
}

TEST_CASE("point sets") {
  CHECK(pointset_contains(PointSet({{1, 10}, {5, 3}, {9, 7}}), Pattern(Permutation{3, 1, 2})));
  CHECK_FALSE(pointset_contains(PointSet({{1, 10}, {5, 3}, {9, 7}}), Pattern(Permutation{1, 2, 3})));
}

TEST_CASE("barred containment against the general oracle") {
  const BarredPattern b(Permutation{3, 5, 2, 4, 1}, {2});
  const Pattern mesh = barred_to_mesh(b);
  for (int n = 0; n <= 7; ++n) {
    for (const auto& w : oracle::all_permutations(n)) {
      const bool lit = contains(b, w);
      REQUIRE(lit == oracle::naive_barred_contains(b, w));
      REQUIRE(lit == contains(mesh, w));
    }
  }
  CHECK_THROWS_AS(contains(BarredPattern(Permutation{1, 3, 2}, {1, 2}), Permutation{1}), std::invalid_argument);
}

TEST_CASE("random patterns agree with the subset oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Pattern pat = oracle::random_pattern(rng, 4, 2);
    for (int n = 0; n <= 6; ++n) {
      for (const auto& w : oracle::all_permutations(n)) {
        if (count_occurrences(pat, w) != oracle::naive_count(pat, w)) {
          FAIL("mismatch for " << print(pat) << " on " << Permutation(w).str());
        }
      }
    }
  }
}

TEST_CASE("avoidance classes") {
  const std::vector<Pattern> p231{Pattern(Permutation{2, 3, 1})};
  const std::vector<std::uint64_t> catalan{1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 7; ++n) CHECK(count_avoiders(n, p231) == catalan[static_cast<std::size_t>(n)]);
  const auto cls = avoidance_class(3, p231);
  CHECK(cls.count == 5);
  CHECK(cls.members.front() == Permutation({1, 2, 3}));
  CHECK(cls.members.back() == Permutation({3, 2, 1}));
  CHECK_THROWS_AS(avoidance_class(11, p231), std::out_of_range);
  std::vector<Permutation> streamed;
  CHECK(for_each_avoider(4, p231, [&](const Permutation& p) { streamed.push_back(p); }) == 14);
  CHECK(streamed == avoidance_class(4, p231).members);
}

TEST_CASE("equivalence and implication") {
  const std::vector<Pattern> a{parse_pattern("3241|sh{(1,3),(1,4)}")};
  const std::vector<Pattern> b{parse_pattern("3241|sh{(1,4)}")};
  CHECK(equivalent_on(a, b, 7).equivalent);
  const std::vector<Pattern> c{Pattern(Permutation{3, 2, 4, 1})};
  const auto r = equivalent_on(b, c, 7);
  CHECK_FALSE(r.equivalent);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->size() == 5);
  CHECK(contains(c[0], *r.counterexample));
  CHECK_FALSE(contains(b[0], *r.counterexample));
  CHECK(implies_containment(Pattern(Permutation{1, 2, 3}), Pattern(Permutation{1, 2}), 6));
  CHECK_FALSE(implies_containment(Pattern(Permutation{1, 2}), Pattern(Permutation{1, 2, 3}), 6));
  CHECK(containment_counterexample(Pattern(Permutation{1, 2}), Pattern(Permutation{1, 2, 3}), 6) ==
        Permutation({1, 2}));
}

TEST_CASE("worker count does not change results") {
  const std::vector<Pattern> pats{parse_pattern("3241|sh{(1,4)}"), Pattern(Permutation{2, 3, 4, 1})};
  CHECK(count_avoiders(8, pats, 1) == count_avoiders(8, pats, 4));
  CHECK(avoidance_class(7, pats, 10, 1).members == avoidance_class(7, pats, 10, 3).members);
}
