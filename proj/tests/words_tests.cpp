#include <doctest.h>

#include "artin/errors.hpp"
#include "artin/words.hpp"
#include "test_util.hpp"

using namespace artin;
using testutil::graph;

TEST_CASE("letters and lifts") {
  CHECK(positive_letter(0) == 1);
  CHECK(inverse_letter(2) == -3);
  CHECK(letter_vertex(-3) == 2);
  CHECK(letter_positive(1));
  CHECK_FALSE(letter_positive(-1));
  CHECK(lift(CoxWord{0, 2}) == GroupWord{1, 3});
  CHECK(shadow(GroupWord{1, -3, 2}) == CoxWord{0, 2, 1});
  CHECK(is_positive(GroupWord{1, 2}));
  CHECK_FALSE(is_positive(GroupWord{1, -2}));
}

TEST_CASE("inverse reverses and negates") {
  CHECK(inverse(GroupWord{1, -2, 3}) == GroupWord{-3, 2, -1});
  CHECK(inverse(GroupWord{}) == GroupWord{});
}

TEST_CASE("letters_of collects vertices") {
  VertexSet v = letters_of(GroupWord{1, -3, 1});
  CHECK(v.elements() == std::vector<int>{0, 2});
}

TEST_CASE("alternating words") {
  CHECK(alternating_word(0, 1, 2) == CoxWord{0, 1});
  CHECK(alternating_word(0, 1, 5) == CoxWord{0, 1, 0, 1, 0});
  CHECK(alternating_word(1, 0, 3) == CoxWord{1, 0, 1});
  CHECK_THROWS_AS(alternating_word(0, 0, 3), Error);
  CHECK_THROWS_AS(alternating_word(0, 1, 1), Error);
  CHECK_THROWS_AS(alternating_word(0, 1, infinity_label), Error);
}

TEST_CASE("word parsing and formatting round-trip") {
  CoxeterGraph g = graph("vertices: s t u\n");
  GroupWord w = parse_group_word(g, "s t^-1  u s^-1");
  CHECK(w == GroupWord{1, -2, 3, -1});
  CHECK(format_group_word(g, w) == "s t^-1 u s^-1");
  CHECK(parse_group_word(g, format_group_word(g, w)) == w);
  CHECK(parse_group_word(g, "") == GroupWord{});
  CHECK(format_group_word(g, {}) == "");

  CHECK(parse_cox_word(g, "s u s") == CoxWord{0, 2, 0});
  CHECK(format_cox_word(g, CoxWord{0, 2}) == "s u");
}

TEST_CASE("word parse errors") {
  CoxeterGraph g = graph("vertices: s t\n");
  CHECK_THROWS_AS(parse_group_word(g, "s q"), Error);
  CHECK_THROWS_AS(parse_group_word(g, "s^2"), Error);
  CHECK_THROWS_AS(parse_cox_word(g, "s t^-1"), Error);
}

TEST_CASE("remap_word follows names across graphs") {
  CoxeterGraph g = graph("vertices: a b c\n");
  CoxeterGraph h = graph("vertices: c a\n");
  GroupWord w = parse_group_word(g, "c a^-1");
  CHECK(remap_word(g, h, w) == parse_group_word(h, "c a^-1"));
  CHECK_THROWS_AS(remap_word(g, h, parse_group_word(g, "b")), Error);
}
