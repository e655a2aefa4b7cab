#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "artin/amalgam.hpp"
#include "artin/errors.hpp"

#include "test_util.hpp"

using namespace artin;
using testutil::graph;

namespace {

GroupWord gw(const CoxeterGraph& g, const std::string& text) {
  return parse_group_word(g, text);
}

// Free reduction in the free product of two copies of Z, for cross-checking
// the two-generator graph with an unbounded edge.
bool freely_trivial(const GroupWord& w) {
  GroupWord stack;
  for (int letter : w) {
    if (!stack.empty() && stack.back() == -letter)
      stack.pop_back();
    else
      stack.push_back(letter);
  }
  return stack.empty();
}

GroupWord random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> vertex(0, rank - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  GroupWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int v = vertex(rng);
    w.push_back(sign(rng) ? positive_letter(v) : inverse_letter(v));
  }
  return w;
}

}  // namespace

TEST_CASE("decomposition trees split along unbounded edges") {
  SUBCASE("free-of-infinity graphs are leaves") {
    auto t = decomposition_tree(graph("vertices: s t u\nedge: s t 3\nedge: t u 4"));
    CHECK(t.leaf);
    CHECK(t.leaf_spherical);
    CHECK(t.supported());
  }
  SUBCASE("non-spherical leaf") {
    auto t = decomposition_tree(graph("vertices: a b c\n"
                                      "edge: a b 3\nedge: b c 3\nedge: a c 3"));
    CHECK(t.leaf);
    CHECK_FALSE(t.leaf_spherical);
    CHECK_FALSE(t.supported());
  }
  SUBCASE("single unbounded edge") {
    auto g = graph("vertices: s t u\nedge: s t inf\nedge: s u 3");
    auto t = decomposition_tree(g);
    REQUIRE_FALSE(t.leaf);
    CHECK(g.vertex_name(t.edge_s) == "s");
    CHECK(g.vertex_name(t.edge_t) == "t");
    CHECK(t.x == g.set_of({"t", "u"}));
    CHECK(t.y == g.set_of({"s", "u"}));
    CHECK(t.z == g.set_of({"u"}));
    REQUIRE(t.left);
    REQUIRE(t.right);
    CHECK(t.left->leaf);
    CHECK(t.left->leaf_spherical);
    CHECK(t.left->graph.vertex_names() == std::vector<std::string>{"t", "u"});
    CHECK(t.supported());
  }
  SUBCASE("edge choice picks different splits") {
    auto g = graph("vertices: a b c d\nedge: a b inf\nedge: c d inf");
    auto small = decomposition_tree(g, EdgeChoice::LexSmallest);
    REQUIRE_FALSE(small.leaf);
    CHECK(g.vertex_name(small.edge_s) == "a");
    auto large = decomposition_tree(g, EdgeChoice::LexLargest);
    REQUIRE_FALSE(large.leaf);
    CHECK(g.vertex_name(large.edge_s) == "c");
    // Both eventually split the other edge and bottom out in spherical
    // leaves.
    CHECK(small.supported());
    CHECK(large.supported());
    REQUIRE_FALSE(small.left->leaf);
    CHECK(small.left->graph.vertex_names() == std::vector<std::string>{"b", "c", "d"});
  }
}

TEST_CASE("syllabification tags letters by side") {
  auto g = graph("vertices: s t u\nedge: s t inf\nedge: s u 3");
  auto t = decomposition_tree(g);
  // X = {t,u} is side 1, Y = {s,u} is side 2; u defaults to side 1.
  auto expr = syllabify(t, gw(g, "s t u s^-1"));
  REQUIRE(expr.size() == 4);
  CHECK(expr[0].factor == 2);
  CHECK(expr[0].word == GroupWord{positive_letter(0)});
  CHECK(expr[1].factor == 1);
  CHECK(expr[2].factor == 1);
  CHECK(expr[3].factor == 2);
  CHECK(expr[3].word == GroupWord{inverse_letter(0)});
}

TEST_CASE("syllabic reduction on a hand-checked expression") {
  auto g = graph("vertices: s t u\nedge: s t inf\nedge: s u 3");
  auto t = decomposition_tree(g);
  AmalgamSolver solver(g);

  // sigma_u tagged X, sigma_s tagged Y: sigma_u lies in the edge subgroup
  // {u}, so it is rewritten over Z and merged right, giving one syllable.
  SyllabicExpression expr = {{gw(g, "u"), 1}, {gw(g, "s"), 2}};
  FactorOracles oracles{
      [&](int, const GroupWord& w) { return solver.is_trivial(w); },
      [&](int factor, const GroupWord& w) {
        const auto& sub = factor == 1 ? t.x : t.y;
        AmalgamSolver fac(g.induced(sub));
        auto local = remap_word(g, fac.graph(), w);
        auto r = fac.member_rewrite(local, fac.graph().set_of({"u"}));
        if (!r) return std::optional<GroupWord>{};
        return std::optional<GroupWord>{remap_word(fac.graph(), g, *r)};
      },
  };
  auto reduced = reduce_syllabic(t, expr, oracles);
  REQUIRE(reduced.length() == 1);
  CHECK(reduced.syllables[0].factor == 2);
  CHECK(reduced.syllables[0].word == gw(g, "u s"));
}

TEST_CASE("word problem in the free group of an unbounded edge") {
  auto g = graph("vertices: s t\nedge: s t inf");
  AmalgamSolver solver(g);
  CHECK(solver.is_trivial(gw(g, "")));
  CHECK(solver.is_trivial(gw(g, "s s^-1 t t^-1")));
  CHECK_FALSE(solver.is_trivial(gw(g, "s t s^-1 t^-1")));
  CHECK_FALSE(solver.is_trivial(gw(g, "s s")));

  std::mt19937 rng(2026);
  for (int trial = 0; trial < 300; ++trial) {
    auto w = random_word(rng, 2, 14);
    CAPTURE(format_group_word(g, w));
    CHECK(solver.is_trivial(w) == freely_trivial(w));
  }
}

TEST_CASE("word problem through a spherical edge subgroup") {
  // A_{st} free over Z = <sigma_u> with A_{su}: commutators that vanish.
  auto g = graph("vertices: s t u\nedge: s t inf\nedge: s u 3");
  AmalgamSolver solver(g);
  // t and u commute (label 2), s and u braid but do not commute.
  CHECK(solver.is_trivial(gw(g, "t u t^-1 u^-1")));
  CHECK_FALSE(solver.is_trivial(gw(g, "s u s^-1 u^-1")));
  CHECK(solver.is_trivial(gw(g, "s u s u^-1 s^-1 u^-1")));
  CHECK_FALSE(solver.is_trivial(gw(g, "s t s^-1 t^-1")));
  // Defining relator of the s-u edge, conjugated across the amalgam.
  CHECK(solver.is_trivial(gw(g, "t s u s u^-1 s^-1 u^-1 t^-1")));

  SUBCASE("reduced length is a strategy-independent invariant") {
    std::mt19937 rng(11);
    AmalgamSolver rightmost(g, AmalgamOptions{.strategy = ReductionStrategy::Rightmost});
    for (int trial = 0; trial < 120; ++trial) {
      auto w = random_word(rng, 3, 12);
      CAPTURE(format_group_word(g, w));
      CHECK(solver.reduce(w).length() == rightmost.reduce(w).length());
    }
  }

  SUBCASE("inverses reduce to the trivial expression") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      auto w = random_word(rng, 3, 10);
      GroupWord ww = w;
      auto inv = inverse(w);
      ww.insert(ww.end(), inv.begin(), inv.end());
      CAPTURE(format_group_word(g, ww));
      CHECK(solver.is_trivial(ww));
    }
  }

  SUBCASE("multiplying by a defining relator never changes triviality") {
    std::mt19937 rng(13);
    const GroupWord relator = gw(g, "s u s u^-1 s^-1 u^-1");
    for (int trial = 0; trial < 100; ++trial) {
      auto w = random_word(rng, 3, 8);
      auto with = w;
      with.insert(with.end(), relator.begin(), relator.end());
      CAPTURE(format_group_word(g, w));
      CHECK(solver.is_trivial(w) == solver.is_trivial(with));
    }
  }
}

TEST_CASE("word problem results agree across split choices") {
  auto g = graph("vertices: a b c d\nedge: a b inf\nedge: c d inf\nedge: b c 3");
  AmalgamSolver smallest(g);
  AmalgamSolver largest(g, AmalgamOptions{.edge_choice = EdgeChoice::LexLargest});
  REQUIRE(smallest.tree().supported());
  REQUIRE(largest.tree().supported());
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto w = random_word(rng, 4, 10);
    CAPTURE(format_group_word(g, w));
    CHECK(smallest.is_trivial(w) == largest.is_trivial(w));
  }
}

TEST_CASE("membership descent through an amalgam") {
  auto g = graph("vertices: s t u\nedge: s t inf\nedge: s u 3");
  AmalgamSolver solver(g);

  SUBCASE("easy splits on subsets missing an edge endpoint") {
    auto r = solver.member_rewrite(gw(g, "u s u s^-1 u^-1"), g.set_of({"s", "u"}));
    REQUIRE(r.has_value());
    CHECK(letters_of(*r).subset_of(g.set_of({"s", "u"})));
    CHECK_FALSE(solver.member_rewrite(gw(g, "t"), g.set_of({"s", "u"})).has_value());
    CHECK_FALSE(solver.member_rewrite(gw(g, "s"), g.set_of({"t", "u"})).has_value());
    // A conjugate that collapses into the subgroup.
    auto conj = solver.member_rewrite(gw(g, "t u t^-1"), g.set_of({"u"}));
    REQUIRE(conj.has_value());
    CHECK(*conj == gw(g, "u"));
  }

  SUBCASE("membership in the edge subgroup") {
    // s u s = u s u in A_{su}, so s u s u^-1 s^-1 lies in <sigma_u>... it
    // equals u s u u^-1 s^-1 = u. Wait, that's the relator shifted: check
    // through the solver and verify the value.
    auto r = solver.member_rewrite(gw(g, "s u s u^-1 s^-1"), g.set_of({"u"}));
    REQUIRE(r.has_value());
    CHECK(*r == gw(g, "u"));
  }

  SUBCASE("hard case with both endpoints in the subset") {
    // 2 x 2 square of commuting pairs with two unbounded edges.
    auto h = graph("vertices: a b c d\nedge: a b inf\nedge: c d inf");
    AmalgamSolver hs(h);
    auto sub = h.set_of({"a", "b"});
    auto inside = hs.member_rewrite(gw(h, "c a b c^-1"), sub);
    REQUIRE(inside.has_value());
    CHECK(letters_of(*inside).subset_of(sub));
    CHECK_FALSE(hs.member_rewrite(gw(h, "c"), sub).has_value());
    CHECK_FALSE(hs.member_rewrite(gw(h, "a c"), sub).has_value());
    CHECK_FALSE(hs.member_rewrite(gw(h, "c a"), sub).has_value());
    // Word with trivial image outside the subset letters.
    auto mixed = hs.member_rewrite(gw(h, "c a c^-1 b"), sub);
    REQUIRE(mixed.has_value());
    CHECK(letters_of(*mixed).subset_of(sub));
  }

  SUBCASE("full and empty subsets") {
    auto all = solver.member_rewrite(gw(g, "s t u"), g.all_vertices());
    REQUIRE(all.has_value());
    CHECK_FALSE(solver.member_rewrite(gw(g, "s"), VertexSet{}).has_value());
    auto empty = solver.member_rewrite(gw(g, "s s^-1"), VertexSet{});
    REQUIRE(empty.has_value());
    CHECK(empty->empty());
  }
}

TEST_CASE("unsupported leaves raise honest errors") {
  // Affine triangle hanging off an unbounded edge: words confined to the
  // supported side still work, words entering the triangle do not.
  auto g = graph("vertices: a b c d\n"
                 "edge: a b 3\nedge: b c 3\nedge: a c 3\nedge: c d inf");
  AmalgamSolver solver(g);
  CHECK_FALSE(solver.tree().supported());
  // The split removes c from the X side, so words avoiding c only ever
  // consult the spherical leaf on {a, b, d}.
  CHECK_FALSE(solver.is_trivial(gw(g, "d")));
  CHECK_FALSE(solver.is_trivial(gw(g, "a b a^-1 b^-1 d a d^-1")));
  CHECK(solver.is_trivial(gw(g, "a d a^-1 d^-1")));
  try {
    solver.is_trivial(gw(g, "c a c^-1"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedBaseCase);
  }
}

TEST_CASE("support predicate anticipates refusals") {
  SUBCASE("spherical graphs and chains of unbounded edges are supported") {
    CHECK(AmalgamSolver(graph("vertices: s t u\nedge: s t 3\nedge: t u 4"))
              .word_problem_supported());
    CHECK(AmalgamSolver(graph("vertices: s t\nedge: s t inf")).word_problem_supported());
    auto chain = graph("vertices: a b c d\nedge: a b inf\nedge: b c inf\nedge: c d inf");
    CHECK(AmalgamSolver(chain).word_problem_supported());
    CHECK(AmalgamSolver(chain, AmalgamOptions{.edge_choice = EdgeChoice::LexLargest})
              .word_problem_supported());
  }
  SUBCASE("non-spherical leaves are refused") {
    CHECK_FALSE(AmalgamSolver(graph("vertices: a b c\n"
                                    "edge: a b 3\nedge: b c 3\nedge: a c 3"))
                    .word_problem_supported());
    CHECK_FALSE(AmalgamSolver(graph("vertices: a b c d\n"
                                    "edge: a b 3\nedge: b c 3\nedge: a c 3\nedge: c d inf"))
                    .word_problem_supported());
  }
  SUBCASE("membership sweep crossing a nested unbounded edge") {
    // Splitting at (c, d) leaves the factor on {a, b, c, e} with two
    // unbounded edges inside the edge subgroup {a, b, e}; rewriting its
    // syllables over that subgroup sweeps through the factor on {a, b, c},
    // which still has one.  The first-edge split avoids this.
    auto g = graph("vertices: a b c d e\n"
                   "edge: a b inf\nedge: b e inf\nedge: c d inf\nedge: b c 3");
    AmalgamSolver smallest(g);
    AmalgamSolver largest(g, AmalgamOptions{.edge_choice = EdgeChoice::LexLargest});
    CHECK(smallest.word_problem_supported());
    CHECK_FALSE(largest.word_problem_supported());

    auto w = gw(g, "d c e b");
    CHECK_FALSE(smallest.is_trivial(w));
    try {
      largest.is_trivial(w);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedBaseCase);
    }
  }
}

TEST_CASE("amalgam solver rejects out-of-range letters") {
  auto g = graph("vertices: s t\nedge: s t inf");
  AmalgamSolver solver(g);
  try {
    solver.is_trivial(GroupWord{5});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}
