#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "artin/coxeter_graph.hpp"
#include "artin/errors.hpp"
#include "test_util.hpp"

using namespace artin;
using testutil::graph;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Internal;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  FAIL("expected an Error");
  return "";
}

}  // namespace

TEST_CASE("parse accepts comments, blank lines and explicit label 2") {
  CoxeterGraph g = graph(
      "# demo\n"
      "vertices: s t u\n"
      "\n"
      "edge: s t 3   # trailing comment\n"
      "edge: t u 2\n");
  CHECK(g.rank() == 3);
  CHECK(g.label(0, 1) == 3);
  CHECK(g.label(1, 2) == 2);
  CHECK(g.label(0, 2) == 2);  // absent pair defaults to 2
}

TEST_CASE("parse reads inf labels") {
  CoxeterGraph g = graph("vertices: s t\nedge: s t inf\n");
  CHECK(g.label(0, 1) == infinity_label);
  CHECK(g.has_infinite_label());
}

TEST_CASE("serialize round-trips and elides label-2 edges") {
  CoxeterGraph g = graph(
      "vertices: c a b\n"
      "edge: a b inf\n"
      "edge: c a 5\n"
      "edge: c b 2\n");
  std::string text = g.serialize();
  CHECK(text == "vertices: c a b\nedge: a b inf\nedge: a c 5\n");
  CHECK(CoxeterGraph::parse(text) == g);
}

TEST_CASE("parse reports locations") {
  auto at = [](const std::string& text) {
    return message_of([&] { CoxeterGraph::parse(text); });
  };
  CHECK(at("edge: s t 3\n").find("line 1") != std::string::npos);
  CHECK(at("vertices: s t\nedge: s q 3\n") == std::string("unknown vertex 'q' at line 2, column 9"));
  CHECK(at("vertices: s t\nedge: s t x\n").find("line 2") != std::string::npos);
  CHECK(at("vertices: s s\n").find("duplicate vertex 's'") != std::string::npos);
  CHECK(code_of([&] { CoxeterGraph::parse("vertices: s t\nedge: s t 1\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { CoxeterGraph::parse("vertices: s t\nedge: s s 3\n"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { CoxeterGraph::parse("vertices: s t\nedge: s t 3\nedge: t s 4\n"); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("constructor validation") {
  CHECK(code_of([] { CoxeterGraph({"s", "s"}, {}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { CoxeterGraph({"s", "t"}, {{"s", "s", 3}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { CoxeterGraph({"s", "t"}, {{"s", "t", 1}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { CoxeterGraph({"s", "t"}, {{"s", "q", 3}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("induced subgraph keeps declaration order and labels") {
  CoxeterGraph g = graph(
      "vertices: a b c d\n"
      "edge: a b 4\n"
      "edge: b c inf\n"
      "edge: c d 3\n");
  CoxeterGraph h = g.induced(std::vector<std::string>{"d", "b", "a"});
  CHECK(h.vertex_names() == std::vector<std::string>{"a", "b", "d"});
  CHECK(h.label(h.require_index("a"), h.require_index("b")) == 4);
  CHECK(h.label(h.require_index("b"), h.require_index("d")) == 2);
  CHECK_FALSE(h.has_infinite_label());
}

TEST_CASE("components use adjacency label >= 3 including inf") {
  CoxeterGraph g = graph(
      "vertices: a b c d e\n"
      "edge: a b 3\n"
      "edge: c d inf\n");
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  CHECK(g.names_of(comps[0]) == std::vector<std::string>{"a", "b"});
  CHECK(g.names_of(comps[1]) == std::vector<std::string>{"c", "d"});
  CHECK(g.names_of(comps[2]) == std::vector<std::string>{"e"});
}

TEST_CASE("vertex set operations") {
  VertexSet v;
  v.add(0);
  v.add(3);
  CHECK(v.count() == 2);
  CHECK(v.contains(3));
  CHECK_FALSE(v.contains(1));
  CHECK(v.elements() == std::vector<int>{0, 3});
  CHECK(v.subset_of(VertexSet::full(4)));
  CHECK_FALSE(VertexSet::full(4).subset_of(v));
  CHECK(v.intersect(VertexSet::single(3)) == VertexSet::single(3));
  CHECK(v.minus(VertexSet::single(3)) == VertexSet::single(0));
  CHECK(v.unite(VertexSet::single(1)).count() == 3);
}

TEST_CASE("set_of and names_of are inverse") {
  CoxeterGraph g = graph("vertices: x y z\n");
  VertexSet v = g.set_of({"z", "x"});
  CHECK(g.names_of(v) == std::vector<std::string>{"x", "z"});
  CHECK(code_of([&] { g.set_of({"w"}); }) == ErrorCode::InvalidArgument);
}
