#include "meshkit/dsl.hpp"
#include "meshkit/fixtures.hpp"
#include "meshkit/matcher.hpp"
#include "meshkit/preimage.hpp"

#include <doctest.h>

using namespace meshkit;

namespace {

std::vector<std::string> printed(const std::vector<Pattern>& pats) {
  std::vector<std::string> out;
  for (const auto& p : pats) out.push_back(print(p));
  return out;
}

}  // namespace

TEST_CASE("stack preimages of small targets") {
  CHECK(printed(stack_preimage_basis(parse_pattern("21")).patterns) == std::vector<std::string>{"21|mark{(1,2)}>=1"});
  CHECK(printed(stack_preimage_basis(parse_pattern("231")).patterns) ==
        std::vector<std::string>{"231|mark{(2,3)}>=1", "321|sh{(1,3)}|mark{(2,3)}>=1"});
  CHECK(printed(stack_preimage_basis(parse_pattern("12")).patterns) ==
        std::vector<std::string>{"12", "21|sh{(1,2)}"});
}

TEST_CASE("bubble preimages of small targets") {
  CHECK(printed(bubble_preimage_basis(parse_pattern("21")).patterns) ==
        std::vector<std::string>{"21|mark{(0,2),(1,2)}>=1"});
  const auto b = bubble_preimage_basis(parse_pattern("1243"));
  CHECK(b.patterns.size() == 4);
  CHECK(b.patterns == fixture("BUBBLE_1243"));
}

TEST_CASE("members keep the target's value inversions") {
  for (const char* t : {"132", "2341", "3142", "4231"}) {
    const Pattern target = parse_pattern(t);
    for (SortOperator op : {SortOperator::Stack, SortOperator::Bubble}) {
      for (const auto& m : preimage_basis(op, target).patterns) {
        CHECK(m.length() == target.length());
        const auto inv = m.word().inverse();
        for (auto [i, j] : inversions(target.word())) CHECK(inv(target.word()(i)) < inv(target.word()(j)));
      }
    }
  }
}

TEST_CASE("preimage bases verify for every target up to length 3") {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& w : avoidance_class(k, {}).members) {
      for (SortOperator op : {SortOperator::Stack, SortOperator::Bubble}) {
        const auto rep = preimage_verify(preimage_basis(op, Pattern(w)), 7);
        CHECK_MESSAGE(rep.pass, to_string(op), " ", w.str());
      }
    }
  }
}

TEST_CASE("a failing basis is reported with the first counterexample") {
  PreimageBasis wrong{Pattern(Permutation{2, 1}), SortOperator::Stack, {Pattern(Permutation{3, 2, 1})}};
  const auto rep = preimage_verify(wrong, 5);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.counterexample);
  CHECK(*rep.counterexample == Permutation({2, 3, 1}));
}

TEST_CASE("non-classical targets are rejected") {
  CHECK_THROWS_AS(stack_preimage_basis(parse_pattern("21|sh{(0,0)}")), std::invalid_argument);
  CHECK_THROWS_AS(bubble_preimage_basis(parse_pattern("21|mark{(0,0)}>=1")), std::invalid_argument);
}

TEST_CASE("inserting a point splits boxes") {
  const Pattern p = parse_pattern("21|sh{(1,1)}|mark{(1,2)}>=1");
  CHECK(print(insert_point(p, {1, 2})) == "231|sh{(1,1),(2,1)}|mark{(1,2),(1,3),(2,2),(2,3)}>=1");
  CHECK(print(insert_point(Pattern(Permutation{1}), {0, 1})) == "21");
  CHECK(print(insert_point(Pattern(Permutation{1}), {1, 1})) == "12");
  CHECK_THROWS_AS(insert_point(parse_pattern("1|dec{(0,0)}avoids(1)"), {0, 0}), std::invalid_argument);
}

TEST_CASE("mark expansion") {
  const auto e21 = expand_marks(parse_pattern("21|mark{(1,2)}>=1"));
  CHECK(printed(e21) == std::vector<std::string>{"231"});
  CHECK(expand_marks(fixture("BUBBLE_1243")).size() == 8);
  const auto ej = expand_marks(fixture("J3").at(0));
  CHECK(std::find(ej.begin(), ej.end(), fixture("J3_MESH").at(0)) != ej.end());
  for (const auto& m : ej) CHECK(m.is_mesh());
  CHECK(equivalent_on(ej, fixture("J3"), 7).equivalent);
  CHECK_THROWS_AS(expand_marks(parse_pattern("21|mark{(1,2)}>=2")), std::invalid_argument);
  CHECK(expand_marks(parse_pattern("21|sh{(0,0)}")) == std::vector<Pattern>{parse_pattern("21|sh{(0,0)}")});
}

TEST_CASE("the 2341 basis reproduces the I patterns") {
  const auto basis = stack_preimage_basis(parse_pattern("2341"));
  CHECK(equivalent_on(expand_marks(basis.patterns), fixture("I_SET"), 8).equivalent);
}
