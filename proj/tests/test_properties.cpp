#include "properties.hpp"

#include <doctest.h>

TEST_CASE("parse/print round trip") {
  const auto f = props::parse_print_roundtrip(1000, 3);
  CHECK_MESSAGE(!f, f.value_or(""));
}

TEST_CASE("symmetry equivariance") {
  const auto f = props::symmetry_equivariance(6);
  CHECK_MESSAGE(!f, f.value_or(""));
}

TEST_CASE("operators agree with recursion") {
  const auto f = props::operator_recursion(8);
  CHECK_MESSAGE(!f, f.value_or(""));
}

TEST_CASE("non-inversions survive a pass") {
  const auto f = props::non_inversions_preserved(8);
  CHECK_MESSAGE(!f, f.value_or(""));
}

TEST_CASE("matcher agrees with the subset oracle on fixtures") {
  const auto f = props::matcher_vs_naive(7);
  CHECK_MESSAGE(!f, f.value_or(""));
}
