#include "meshkit/dsl.hpp"

#include <doctest.h>

using namespace meshkit;

TEST_CASE("parse each clause kind") {
  const Pattern p = parse_pattern("132|sh{(0,2),(1,2),(2,2)}");
  CHECK(p.word() == Permutation({1, 3, 2}));
  CHECK(p.shaded_boxes() == BoxSet{{0, 2}, {1, 2}, {2, 2}});

  const Pattern m = parse_pattern("21|mark{(0,2),(1,2)}>=1");
  REQUIRE(m.constraints().size() == 1);
  CHECK(m.constraints()[0].kind() == ConstraintKind::AtLeast);
  CHECK(m.constraints()[0].count() == 1);

  const Pattern d = parse_pattern("21|dec{(1,1)}avoids(12)");
  REQUIRE(d.constraints().size() == 1);
  CHECK(d.constraints()[0].avoided() == Pattern(Permutation{1, 2}));

  const Pattern nested = parse_pattern("21|dec{(1,1)}avoids(12|dec{(0,0)}avoids(1))");
  CHECK(nested.constraints()[0].avoided().has_decorations());
}

TEST_CASE("whitespace and bracket words") {
  CHECK(parse_pattern(" 132 | sh { (0,2) , (1,2) } ") == parse_pattern("132|sh{(0,2),(1,2)}"));
  CHECK(parse_pattern("[1,3,2]") == parse_pattern("132"));
  CHECK(parse_pattern("[]").length() == 0);
  const Pattern big = parse_pattern("[10,1,2,3,4,5,6,7,8,9]|sh{(10,10)}");
  CHECK(big.length() == 10);
  CHECK(print(big) == "[10,1,2,3,4,5,6,7,8,9]|sh{(10,10)}");
}

TEST_CASE("printing is canonical") {
  CHECK(print(parse_pattern("132|mark{(1,0)}>=2|sh{(2,2),(0,2)}")) == "132|sh{(0,2),(2,2)}|mark{(1,0)}>=2");
  CHECK(print(parse_pattern("2341")) == "2341");
}

TEST_CASE("barred patterns") {
  const ParsedPattern parsed = parse("35'241");
  REQUIRE(std::holds_alternative<BarredPattern>(parsed));
  const auto& b = std::get<BarredPattern>(parsed);
  CHECK(b.barred() == std::vector<int>{2});
  CHECK(print(b) == "35'241");
  CHECK(parse_pattern("35'241") == parse_pattern("3241|sh{(1,4)}"));
  CHECK(parse_barred("[3,5',2,4,1]") == b);
  CHECK_THROWS_AS(parse_pattern("3'5'241"), ParseError);
  CHECK_THROWS_AS(parse("35'241|sh{(0,0)}"), ParseError);
}

TEST_CASE("errors carry spans") {
  try {
    (void)parse_pattern("132|sh{(0,2),(4,1)}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span() == SourceSpan{13, 18});
  }
  CHECK_THROWS_AS(parse_pattern(""), ParseError);
  CHECK_THROWS_AS(parse_pattern("122"), ParseError);
  CHECK_THROWS_AS(parse_pattern("102"), ParseError);
  CHECK_THROWS_AS(parse_pattern("12|shade{(0,0)}"), ParseError);
  CHECK_THROWS_AS(parse_pattern("12|mark{(0,0)}"), ParseError);
  CHECK_THROWS_AS(parse_pattern("12|mark{(0,0)}>=0"), ParseError);
  CHECK_THROWS_AS(parse_pattern("12|sh{}"), ParseError);
  CHECK_THROWS_AS(parse_pattern("12|dec{(0,0)}avoids(12"), ParseError);
  CHECK_THROWS_AS(parse_pattern("12 extra"), ParseError);
}

TEST_CASE("render") {
  const std::string pic = render_ascii(parse_pattern("21|sh{(0,0)}|mark{(1,1)}>=1|dec{(2,2)}avoids(12)"));
  const std::string expected =
      " │ │a\n"
      "─●─┼─\n"
      " │1│ \n"
      "─┼─●─\n"
      "▒│ │ \n"
      "a: avoids 12\n";
  CHECK(pic == expected);
  CHECK_THROWS_AS(render_ascii(Pattern(Permutation::identity(21))), std::invalid_argument);
}
