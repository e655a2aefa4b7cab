#include <doctest.h>

#include <string>
#include <vector>

#include "artin/errors.hpp"
#include "artin/structure.hpp"

#include "test_util.hpp"

using namespace artin;
using testutil::graph;

TEST_CASE("center of a spherical graph is the product of component centers") {
  auto g = graph("vertices: s t u\nedge: s t 3");
  auto c = center_description(g);
  CHECK(c.unconditional());
  REQUIRE(c.components.size() == 2);

  const auto& st = c.components[0];
  CHECK(st.vertices == std::vector<std::string>{"s", "t"});
  CHECK(st.status == ComponentCenter::Status::InfiniteCyclic);
  // (sigma_s sigma_t)^3 is the center generator of the odd dihedral type.
  CHECK(st.generator == parse_group_word(g, "s t s t s t"));

  const auto& u = c.components[1];
  CHECK(u.status == ComponentCenter::Status::InfiniteCyclic);
  CHECK(u.generator == parse_group_word(g, "u"));

  CHECK(c.product_statement == "Z(A) = Z(A_{s t}) x Z(A_{u}) = Z x Z");
}

TEST_CASE("center of the trivial group on an empty graph") {
  auto c = center_description(CoxeterGraph{});
  CHECK(c.components.empty());
  CHECK(c.product_statement == "Z(A) = 1");
  CHECK(c.unconditional());
}

TEST_CASE("an unbounded edge on two vertices yields a verified trivial center") {
  auto g = graph("vertices: s t\nedge: s t inf");
  auto c = center_description(g);
  CHECK(c.unconditional());
  REQUIRE(c.components.size() == 1);
  const auto& comp = c.components[0];
  CHECK(comp.status == ComponentCenter::Status::Trivial);
  REQUIRE(comp.derivation);

  const auto& d = *comp.derivation;
  CHECK(d.kind == CenterDerivation::Kind::InfinityEdge);
  CHECK(d.edge_s == "s");
  CHECK(d.edge_t == "t");
  CHECK(d.x == std::vector<std::string>{"t"});
  CHECK(d.y == std::vector<std::string>{"s"});
  CHECK(d.z.empty());
  CHECK(d.x1 == std::vector<std::string>{"t"});
  CHECK(d.x2.empty());
  CHECK(d.y1 == std::vector<std::string>{"s"});
  CHECK(d.y2.empty());
  CHECK(d.z1.empty());
  CHECK(d.x2_in_y1);
  CHECK(d.y2_in_x1);
  REQUIRE(d.x1_case);
  CHECK(d.x1_case->kind == CenterDerivation::Kind::SphericalAvoidance);
  CHECK(d.x1_case->component == std::vector<std::string>{"t"});
  CHECK(d.x1_case->avoided.empty());

  CHECK(verify_center_derivation(g, d));
}

TEST_CASE("derivations recurse through nested unbounded edges") {
  auto g = graph("vertices: a b c d\nedge: a b inf\nedge: c d inf\nedge: b c 3");
  auto c = center_description(g);
  CHECK(c.unconditional());
  REQUIRE(c.components.size() == 1);
  const auto& d = *c.components[0].derivation;
  CHECK(d.kind == CenterDerivation::Kind::InfinityEdge);
  CHECK(d.edge_s == "a");
  CHECK(d.edge_t == "b");
  // X = {b,c,d} still carries the c-d edge, so its case is another split.
  REQUIRE(d.x1_case);
  CHECK(d.x1_case->kind == CenterDerivation::Kind::InfinityEdge);
  CHECK(verify_center_derivation(g, d));
}

TEST_CASE("free-of-infinity non-spherical components fall back to a class or hypothesis") {
  SUBCASE("affine triangle, a two-dimensional class result") {
    auto g = graph("vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 3");
    auto c = center_description(g);
    REQUIRE(c.components.size() == 1);
    const auto& comp = c.components[0];
    CHECK(comp.status == ComponentCenter::Status::Trivial);
    REQUIRE(comp.derivation);
    CHECK(comp.derivation->kind == CenterDerivation::Kind::KnownClass);
    CHECK(comp.derivation->known_class == "two_dimensional");
    CHECK_FALSE(comp.derivation->reference.empty());
    CHECK(verify_center_derivation(g, *comp.derivation));
    CHECK(c.unconditional());
  }
  SUBCASE("affine F4 falls outside the covered classes") {
    auto g = graph("vertices: p a b c d\n"
                   "edge: p a 3\nedge: a b 3\nedge: b c 4\nedge: c d 3");
    auto c = center_description(g);
    REQUIRE(c.components.size() == 1);
    const auto& comp = c.components[0];
    CHECK(comp.status == ComponentCenter::Status::Conditional);
    CHECK_FALSE(comp.assumption.empty());
    CHECK_FALSE(c.unconditional());
    REQUIRE(comp.derivation);
    CHECK(comp.derivation->kind == CenterDerivation::Kind::Conditional);
    CHECK(verify_center_derivation(g, *comp.derivation));
  }
}

TEST_CASE("the verifier rejects tampered derivations") {
  auto g = graph("vertices: s t u\nedge: s t inf\nedge: s u 3");
  auto c = center_description(g);
  REQUIRE(c.components.size() == 1);
  REQUIRE(c.components[0].derivation);
  CHECK(verify_center_derivation(g, *c.components[0].derivation));

  SUBCASE("swapping X1 and X2 fails") {
    auto d = center_derivation_from_json(to_json(*c.components[0].derivation));
    std::swap(d.x1, d.x2);
    CHECK_FALSE(verify_center_derivation(g, d));
  }
  SUBCASE("redirecting the edge fails") {
    auto d = center_derivation_from_json(to_json(*c.components[0].derivation));
    d.edge_s = "u";
    CHECK_FALSE(verify_center_derivation(g, d));
  }
  SUBCASE("forging an inclusion flag fails") {
    auto d = center_derivation_from_json(to_json(*c.components[0].derivation));
    d.x2_in_y1 = false;
    CHECK_FALSE(verify_center_derivation(g, d));
  }
  SUBCASE("claiming a wrong known class fails") {
    CenterDerivation d;
    d.kind = CenterDerivation::Kind::KnownClass;
    d.known_class = "two_dimensional";
    d.reference = "wrong";
    CHECK_FALSE(verify_center_derivation(g, d));
  }
  SUBCASE("an unknown vertex name is malformed, not merely false") {
    auto d = center_derivation_from_json(to_json(*c.components[0].derivation));
    d.x1 = {"nope"};
    CHECK_THROWS_AS((void)verify_center_derivation(g, d), Error);
  }
  SUBCASE("a missing sub-case is malformed") {
    auto d = center_derivation_from_json(to_json(*c.components[0].derivation));
    d.x1_case.reset();
    CHECK_THROWS_AS((void)verify_center_derivation(g, d), Error);
  }
}

TEST_CASE("center descriptions survive a JSON round-trip") {
  auto g = graph("vertices: s t u v\nedge: s t inf\nedge: s u 3\nedge: u v 4");
  auto c = center_description(g);
  auto j = to_json(g, c);
  auto back = center_description_from_json(j, g);
  CHECK(back.product_statement == c.product_statement);
  REQUIRE(back.components.size() == c.components.size());
  for (size_t i = 0; i < back.components.size(); ++i) {
    CHECK(back.components[i].status == c.components[i].status);
    CHECK(back.components[i].vertices == c.components[i].vertices);
    CHECK(back.components[i].generator == c.components[i].generator);
    if (c.components[i].derivation)
      CHECK(verify_center_derivation(g.induced(g.set_of(back.components[i].vertices)),
                                     *back.components[i].derivation));
  }
  CHECK(to_json(g, back) == j);
}

TEST_CASE("torsion certificates mirror the decomposition tree") {
  SUBCASE("spherical graph") {
    auto g = graph("vertices: s t\nedge: s t 4");
    auto cert = torsion_certificate(g);
    CHECK(cert.unconditional());
    CHECK(cert.root.leaf);
    CHECK(cert.root.status == TorsionNode::Status::SphericalTorsionFree);
    CHECK_FALSE(cert.root.reference.empty());
    CHECK(verify_torsion_certificate(g, cert));
  }
  SUBCASE("split graph with spherical leaves") {
    auto g = graph("vertices: s t u\nedge: s t inf\nedge: s u 3");
    auto cert = torsion_certificate(g);
    CHECK(cert.unconditional());
    REQUIRE_FALSE(cert.root.leaf);
    CHECK(cert.root.edge_s == "s");
    CHECK(cert.root.edge_t == "t");
    CHECK_FALSE(cert.root.reason.empty());
    REQUIRE(cert.root.left);
    CHECK(cert.root.left->leaf);
    CHECK(verify_torsion_certificate(g, cert));
  }
  SUBCASE("non-spherical leaf covered by a class result keeps its assumption") {
    auto g = graph("vertices: a b c d\n"
                   "edge: a b 3\nedge: b c 3\nedge: a c 3\nedge: c d inf");
    auto cert = torsion_certificate(g);
    CHECK_FALSE(cert.unconditional());
    REQUIRE(cert.assumptions.size() == 1);
    REQUIRE_FALSE(cert.root.leaf);
    // The affine triangle leaf is assumed, with a class note pointing at the
    // two-dimensional result that covers it.
    const TorsionNode* assumed = nullptr;
    const TorsionNode* spherical = nullptr;
    for (const auto* n : {cert.root.left.get(), cert.root.right.get()}) {
      REQUIRE(n);
      REQUIRE(n->leaf);
      (n->status == TorsionNode::Status::AssumedTorsionFree ? assumed : spherical) = n;
    }
    REQUIRE(assumed);
    REQUIRE(spherical);
    CHECK(assumed->assumption == cert.assumptions[0]);
    CHECK_FALSE(assumed->note.empty());
    CHECK(verify_torsion_certificate(g, cert));
  }
}

TEST_CASE("the torsion verifier rejects tampering") {
  auto g = graph("vertices: s t u\nedge: s t inf\nedge: s u 3");
  auto cert = torsion_certificate(g);
  REQUIRE(verify_torsion_certificate(g, cert));

  SUBCASE("flipping a leaf status fails") {
    auto t = torsion_certificate_from_json(to_json(cert));
    REQUIRE(t.root.left);
    t.root.left->status = TorsionNode::Status::AssumedTorsionFree;
    t.root.left->assumption = "made up";
    CHECK_FALSE(verify_torsion_certificate(g, t));
  }
  SUBCASE("dropping the assumption list entry fails") {
    auto h = graph("vertices: a b c d\n"
                   "edge: a b 3\nedge: b c 3\nedge: a c 3\nedge: c d inf");
    auto hc = torsion_certificate(h);
    auto t = torsion_certificate_from_json(to_json(hc));
    t.assumptions.clear();
    CHECK_FALSE(verify_torsion_certificate(h, t));
  }
  SUBCASE("moving the split edge fails") {
    auto t = torsion_certificate_from_json(to_json(cert));
    t.root.edge_t = "u";
    CHECK_FALSE(verify_torsion_certificate(g, t));
  }
  SUBCASE("certificates survive a JSON round-trip") {
    auto j = to_json(cert);
    auto t = torsion_certificate_from_json(j);
    CHECK(verify_torsion_certificate(g, t));
    CHECK(to_json(t) == j);
  }
}
