#include "artin/structure.hpp"

#include <algorithm>

#include "artin/amalgam.hpp"
#include "artin/classification.hpp"
#include "artin/errors.hpp"
#include "artin/garside.hpp"
#include "artin/known_results.hpp"

namespace artin {

namespace {

using nlohmann::json;

const char* const center_hypothesis =
    "hypothesis: a connected free-of-infinity graph outside the finite-type catalog "
    "has trivial center";
const char* const torsion_hypothesis =
    "hypothesis: groups of free-of-infinity graphs are torsion free";
const char* const amalgam_torsion_reason =
    "a finite-order element of an amalgamated product is conjugate into a factor";

[[noreturn]] void structural(const std::string& path, const std::string& what) {
  fail(ErrorCode::InvalidArgument, "malformed derivation at " + path + ": " + what);
}

VertexSet checked_set(const CoxeterGraph& g, const std::vector<std::string>& names,
                      const std::string& path, const std::string& field) {
  VertexSet v;
  for (const auto& n : names) {
    auto idx = g.index_of(n);
    if (!idx) structural(path, field + " names unknown vertex '" + n + "'");
    v.add(*idx);
  }
  return v;
}

/// Component of the subgraph induced on `sub` containing the vertex v, as a
/// vertex set of g.
VertexSet component_within(const CoxeterGraph& g, VertexSet sub, int v) {
  CoxeterGraph h = g.induced(sub);
  int hv = h.require_index(g.vertex_name(v));
  for (VertexSet c : h.components())
    if (c.contains(hv)) return g.set_of(h.names_of(c));
  fail(ErrorCode::Internal, "vertex outside every component of its subgraph");
}

std::unique_ptr<CenterDerivation> build_derivation(const CoxeterGraph& g);

/// Settles one side of the split: a spherical component cites the fact that
/// its center meets the recorded proper parabolic trivially; anything else
/// recurses.
std::unique_ptr<CenterDerivation> sub_case(const CoxeterGraph& h,
                                           std::vector<std::string> avoided) {
  if (is_spherical(h)) {
    auto d = std::make_unique<CenterDerivation>();
    d->kind = CenterDerivation::Kind::SphericalAvoidance;
    d->component = h.vertex_names();
    d->avoided = std::move(avoided);
    return d;
  }
  return build_derivation(h);
}

std::unique_ptr<CenterDerivation> build_derivation(const CoxeterGraph& g) {
  auto d = std::make_unique<CenterDerivation>();
  if (!g.has_infinite_label()) {
    ClassificationReport rep = classify(g);
    const char* cls = rep.fc_type ? "fc" : rep.two_dimensional ? "two_dimensional" : nullptr;
    if (cls) {
      if (auto ref = known_result_reference(cls, "center_trivial")) {
        d->kind = CenterDerivation::Kind::KnownClass;
        d->known_class = cls;
        d->reference = *ref;
        return d;
      }
    }
    d->kind = CenterDerivation::Kind::Conditional;
    d->assumption = center_hypothesis;
    return d;
  }

  int s = -1, t = -1;
  for (int a = 0; a < g.rank() && s < 0; ++a)
    for (int b = a + 1; b < g.rank(); ++b)
      if (g.label(a, b) == infinity_label) {
        s = a;
        t = b;
        break;
      }

  VertexSet all = g.all_vertices();
  VertexSet xs = all;
  xs.remove(s);
  VertexSet ys = all;
  ys.remove(t);
  VertexSet x1 = component_within(g, xs, t);
  VertexSet x2 = xs.minus(x1);
  VertexSet y1 = component_within(g, ys, s);
  VertexSet y2 = ys.minus(y1);
  VertexSet z1 = x1;
  z1.remove(t);

  d->kind = CenterDerivation::Kind::InfinityEdge;
  d->edge_s = g.vertex_name(s);
  d->edge_t = g.vertex_name(t);
  d->x = g.names_of(xs);
  d->y = g.names_of(ys);
  d->z = g.names_of(xs.intersect(ys));
  d->x1 = g.names_of(x1);
  d->x2 = g.names_of(x2);
  d->y1 = g.names_of(y1);
  d->y2 = g.names_of(y2);
  d->z1 = g.names_of(z1);
  d->x2_in_y1 = x2.subset_of(y1);
  d->y2_in_x1 = y2.subset_of(x1);
  if (!d->x2_in_y1 || !d->y2_in_x1)
    fail(ErrorCode::Internal, "factor-component inclusion failed on a connected graph");
  d->x1_case = sub_case(g.induced(x1), g.names_of(z1));
  d->y1_case = sub_case(g.induced(y1), g.names_of(x2));
  return d;
}

bool derivation_unconditional(const CenterDerivation& d) {
  switch (d.kind) {
    case CenterDerivation::Kind::Conditional:
      return false;
    case CenterDerivation::Kind::InfinityEdge:
      return derivation_unconditional(*d.x1_case) && derivation_unconditional(*d.y1_case);
    default:
      return true;
  }
}

const std::string* first_assumption(const CenterDerivation& d) {
  switch (d.kind) {
    case CenterDerivation::Kind::Conditional:
      return &d.assumption;
    case CenterDerivation::Kind::InfinityEdge:
      if (const std::string* a = first_assumption(*d.x1_case)) return a;
      return first_assumption(*d.y1_case);
    default:
      return nullptr;
  }
}

bool set_equal(const CoxeterGraph& g, const std::vector<std::string>& recorded, VertexSet expect,
               const std::string& path, const std::string& field) {
  return checked_set(g, recorded, path, field) == expect;
}

bool verify_node(const CoxeterGraph& g, const CenterDerivation& d,
                 const std::vector<std::string>* expected_avoided, const std::string& path) {
  switch (d.kind) {
    case CenterDerivation::Kind::InfinityEdge: {
      auto si = g.index_of(d.edge_s), ti = g.index_of(d.edge_t);
      if (!si || !ti) structural(path, "edge endpoint is not a vertex of the graph");
      if (*si == *ti) return false;
      if (g.label(*si, *ti) != infinity_label) return false;

      VertexSet all = g.all_vertices();
      VertexSet xs = all;
      xs.remove(*si);
      VertexSet ys = all;
      ys.remove(*ti);
      if (!set_equal(g, d.x, xs, path, "x")) return false;
      if (!set_equal(g, d.y, ys, path, "y")) return false;
      if (!set_equal(g, d.z, xs.intersect(ys), path, "z")) return false;

      VertexSet x1 = component_within(g, xs, *ti);
      VertexSet x2 = xs.minus(x1);
      VertexSet y1 = component_within(g, ys, *si);
      VertexSet y2 = ys.minus(y1);
      VertexSet z1 = x1;
      z1.remove(*ti);
      if (!set_equal(g, d.x1, x1, path, "x1")) return false;
      if (!set_equal(g, d.x2, x2, path, "x2")) return false;
      if (!set_equal(g, d.y1, y1, path, "y1")) return false;
      if (!set_equal(g, d.y2, y2, path, "y2")) return false;
      if (!set_equal(g, d.z1, z1, path, "z1")) return false;

      if (!d.x2_in_y1 || !d.y2_in_x1) return false;
      if (!x2.subset_of(y1) || !y2.subset_of(x1)) return false;

      if (!d.x1_case) structural(path, "missing x1 sub-case");
      if (!d.y1_case) structural(path, "missing y1 sub-case");
      std::vector<std::string> z1_names = g.names_of(z1);
      std::vector<std::string> x2_names = g.names_of(x2);
      return verify_node(g.induced(x1), *d.x1_case, &z1_names, path + ".x1_case") &&
             verify_node(g.induced(y1), *d.y1_case, &x2_names, path + ".y1_case");
    }
    case CenterDerivation::Kind::SphericalAvoidance: {
      VertexSet comp = checked_set(g, d.component, path, "component");
      if (comp != g.all_vertices()) return false;
      if (g.components().size() != 1) return false;
      if (!is_spherical(g)) return false;
      VertexSet av = checked_set(g, d.avoided, path, "avoided");
      if (!av.subset_of(comp) || av == comp) return false;
      if (expected_avoided && checked_set(g, *expected_avoided, path, "avoided") != av)
        return false;
      return true;
    }
    case CenterDerivation::Kind::KnownClass: {
      if (d.known_class != "fc" && d.known_class != "two_dimensional")
        structural(path, "unknown class '" + d.known_class + "'");
      if (g.has_infinite_label()) return false;
      ClassificationReport rep = classify(g);
      if (!rep.connected || rep.spherical) return false;
      bool in_class = d.known_class == "fc" ? rep.fc_type : rep.two_dimensional;
      if (!in_class) return false;
      auto ref = known_result_reference(d.known_class, "center_trivial");
      return ref && *ref == d.reference;
    }
    case CenterDerivation::Kind::Conditional: {
      if (d.assumption.empty()) structural(path, "conditional node without an assumption");
      if (g.has_infinite_label()) return false;
      ClassificationReport rep = classify(g);
      return rep.connected && !rep.spherical;
    }
  }
  structural(path, "unknown node kind");
}

}  // namespace

bool CenterDescription::unconditional() const {
  return std::none_of(components.begin(), components.end(), [](const ComponentCenter& c) {
    return c.status == ComponentCenter::Status::Conditional;
  });
}

CenterDescription center_description(const CoxeterGraph& g) {
  CenterDescription out;
  for (VertexSet comp : g.components()) {
    CoxeterGraph h = g.induced(comp);
    ComponentCenter& c = out.components.emplace_back();
    c.vertices = h.vertex_names();
    if (is_spherical(h)) {
      c.status = ComponentCenter::Status::InfiniteCyclic;
      GarsideSolver solver(h);
      c.generator = remap_word(h, g, lift(solver.center_generator()));
    } else {
      c.derivation = build_derivation(h);
      if (derivation_unconditional(*c.derivation)) {
        c.status = ComponentCenter::Status::Trivial;
      } else {
        c.status = ComponentCenter::Status::Conditional;
        c.assumption = *first_assumption(*c.derivation);
      }
    }
  }

  if (out.components.empty()) {
    out.product_statement = "Z(A) = 1";
    return out;
  }
  std::string sets, values;
  for (const ComponentCenter& c : out.components) {
    if (!sets.empty()) {
      sets += " x ";
      values += " x ";
    }
    std::string names;
    for (const auto& n : c.vertices) {
      if (!names.empty()) names += " ";
      names += n;
    }
    sets += "Z(A_{" + names + "})";
    switch (c.status) {
      case ComponentCenter::Status::InfiniteCyclic:
        values += "Z";
        break;
      case ComponentCenter::Status::Trivial:
        values += "1";
        break;
      case ComponentCenter::Status::Conditional:
        values += "1 (conditional)";
        break;
    }
  }
  out.product_statement =
      out.components.size() == 1 ? "Z(A) = " + values : "Z(A) = " + sets + " = " + values;
  return out;
}

bool verify_center_derivation(const CoxeterGraph& g, const CenterDerivation& d) {
  return verify_node(g, d, nullptr, "derivation");
}

namespace {

TorsionNode build_torsion(const DecompositionTree& t, std::vector<std::string>& assumptions) {
  TorsionNode n;
  n.vertices = t.graph.vertex_names();
  if (t.leaf) {
    n.leaf = true;
    if (t.leaf_spherical) {
      n.status = TorsionNode::Status::SphericalTorsionFree;
      n.reference = known_result_reference("spherical", "torsion_free").value_or("");
    } else {
      n.status = TorsionNode::Status::AssumedTorsionFree;
      n.assumption = torsion_hypothesis;
      if (std::find(assumptions.begin(), assumptions.end(), n.assumption) == assumptions.end())
        assumptions.push_back(n.assumption);
      ClassificationReport rep = classify(t.graph);
      const char* cls = rep.fc_type          ? "fc"
                        : rep.two_dimensional ? "two_dimensional"
                        : rep.extra_large     ? "extra_large"
                                              : nullptr;
      if (cls) {
        if (auto ref = known_result_reference(cls, "torsion_free"))
          n.note = "assumption covered for this leaf: " + *ref;
      }
    }
    return n;
  }
  n.leaf = false;
  n.edge_s = t.graph.vertex_name(t.edge_s);
  n.edge_t = t.graph.vertex_name(t.edge_t);
  n.reason = amalgam_torsion_reason;
  n.left = std::make_unique<TorsionNode>(build_torsion(*t.left, assumptions));
  n.right = std::make_unique<TorsionNode>(build_torsion(*t.right, assumptions));
  return n;
}

bool names_match(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

bool verify_torsion_node(const DecompositionTree& t, const TorsionNode& n,
                         std::vector<std::string>& assumptions, const std::string& path) {
  if (!names_match(n.vertices, t.graph.vertex_names())) return false;
  if (n.leaf != t.leaf) return false;
  if (n.leaf) {
    if (t.leaf_spherical) {
      if (n.status != TorsionNode::Status::SphericalTorsionFree) return false;
      auto ref = known_result_reference("spherical", "torsion_free");
      return ref && *ref == n.reference;
    }
    if (n.status != TorsionNode::Status::AssumedTorsionFree) return false;
    if (n.assumption.empty()) structural(path, "assumed leaf without an assumption label");
    if (std::find(assumptions.begin(), assumptions.end(), n.assumption) == assumptions.end())
      assumptions.push_back(n.assumption);
    return true;
  }
  if (!n.left || !n.right) structural(path, "split node missing a child");
  if (n.edge_s != t.graph.vertex_name(t.edge_s)) return false;
  if (n.edge_t != t.graph.vertex_name(t.edge_t)) return false;
  return verify_torsion_node(*t.left, *n.left, assumptions, path + ".left") &&
         verify_torsion_node(*t.right, *n.right, assumptions, path + ".right");
}

}  // namespace

TorsionCertificate torsion_certificate(const CoxeterGraph& g) {
  TorsionCertificate cert;
  DecompositionTree tree = decomposition_tree(g);
  cert.root = build_torsion(tree, cert.assumptions);
  return cert;
}

bool verify_torsion_certificate(const CoxeterGraph& g, const TorsionCertificate& c) {
  DecompositionTree tree = decomposition_tree(g);
  std::vector<std::string> assumptions;
  if (!verify_torsion_node(tree, c.root, assumptions, "certificate")) return false;
  return assumptions == c.assumptions;
}

namespace {

json derivation_json(const CenterDerivation& d) {
  json j;
  switch (d.kind) {
    case CenterDerivation::Kind::InfinityEdge:
      j["kind"] = "infinity_edge";
      j["edge"] = {d.edge_s, d.edge_t};
      j["x"] = d.x;
      j["y"] = d.y;
      j["z"] = d.z;
      j["x1"] = d.x1;
      j["x2"] = d.x2;
      j["y1"] = d.y1;
      j["y2"] = d.y2;
      j["z1"] = d.z1;
      j["checks"] = {{"x2_in_y1", d.x2_in_y1}, {"y2_in_x1", d.y2_in_x1}};
      j["x1_case"] = derivation_json(*d.x1_case);
      j["y1_case"] = derivation_json(*d.y1_case);
      break;
    case CenterDerivation::Kind::SphericalAvoidance:
      j["kind"] = "spherical_avoidance";
      j["component"] = d.component;
      j["avoided"] = d.avoided;
      break;
    case CenterDerivation::Kind::KnownClass:
      j["kind"] = "known_class";
      j["class"] = d.known_class;
      j["reference"] = d.reference;
      break;
    case CenterDerivation::Kind::Conditional:
      j["kind"] = "conditional";
      j["assumption"] = d.assumption;
      break;
  }
  return j;
}

std::vector<std::string> name_list(const json& j) { return j.get<std::vector<std::string>>(); }

std::unique_ptr<CenterDerivation> derivation_from(const json& j) {
  auto d = std::make_unique<CenterDerivation>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "infinity_edge") {
    d->kind = CenterDerivation::Kind::InfinityEdge;
    d->edge_s = j.at("edge").at(0).get<std::string>();
    d->edge_t = j.at("edge").at(1).get<std::string>();
    d->x = name_list(j.at("x"));
    d->y = name_list(j.at("y"));
    d->z = name_list(j.at("z"));
    d->x1 = name_list(j.at("x1"));
    d->x2 = name_list(j.at("x2"));
    d->y1 = name_list(j.at("y1"));
    d->y2 = name_list(j.at("y2"));
    d->z1 = name_list(j.at("z1"));
    d->x2_in_y1 = j.at("checks").at("x2_in_y1").get<bool>();
    d->y2_in_x1 = j.at("checks").at("y2_in_x1").get<bool>();
    d->x1_case = derivation_from(j.at("x1_case"));
    d->y1_case = derivation_from(j.at("y1_case"));
  } else if (kind == "spherical_avoidance") {
    d->kind = CenterDerivation::Kind::SphericalAvoidance;
    d->component = name_list(j.at("component"));
    d->avoided = name_list(j.at("avoided"));
  } else if (kind == "known_class") {
    d->kind = CenterDerivation::Kind::KnownClass;
    d->known_class = j.at("class").get<std::string>();
    d->reference = j.at("reference").get<std::string>();
  } else if (kind == "conditional") {
    d->kind = CenterDerivation::Kind::Conditional;
    d->assumption = j.at("assumption").get<std::string>();
  } else {
    fail(ErrorCode::ParseError, "unknown derivation kind '" + kind + "'");
  }
  return d;
}

json torsion_node_json(const TorsionNode& n) {
  json j;
  j["vertices"] = n.vertices;
  if (n.leaf) {
    j["kind"] = "leaf";
    if (n.status == TorsionNode::Status::SphericalTorsionFree) {
      j["status"] = "spherical_torsion_free";
      j["reference"] = n.reference;
    } else {
      j["status"] = "assumed_torsion_free";
      j["assumption"] = n.assumption;
      if (!n.note.empty()) j["note"] = n.note;
    }
  } else {
    j["kind"] = "amalgam";
    j["edge"] = {n.edge_s, n.edge_t};
    j["reason"] = n.reason;
    j["left"] = torsion_node_json(*n.left);
    j["right"] = torsion_node_json(*n.right);
  }
  return j;
}

TorsionNode torsion_node_from(const json& j) {
  TorsionNode n;
  n.vertices = name_list(j.at("vertices"));
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "leaf") {
    n.leaf = true;
    std::string status = j.at("status").get<std::string>();
    if (status == "spherical_torsion_free") {
      n.status = TorsionNode::Status::SphericalTorsionFree;
      n.reference = j.at("reference").get<std::string>();
    } else if (status == "assumed_torsion_free") {
      n.status = TorsionNode::Status::AssumedTorsionFree;
      n.assumption = j.at("assumption").get<std::string>();
      if (j.contains("note")) n.note = j.at("note").get<std::string>();
    } else {
      fail(ErrorCode::ParseError, "unknown leaf status '" + status + "'");
    }
  } else if (kind == "amalgam") {
    n.leaf = false;
    n.edge_s = j.at("edge").at(0).get<std::string>();
    n.edge_t = j.at("edge").at(1).get<std::string>();
    n.reason = j.at("reason").get<std::string>();
    n.left = std::make_unique<TorsionNode>(torsion_node_from(j.at("left")));
    n.right = std::make_unique<TorsionNode>(torsion_node_from(j.at("right")));
  } else {
    fail(ErrorCode::ParseError, "unknown certificate node kind '" + kind + "'");
  }
  return n;
}

}  // namespace

json to_json(const CenterDerivation& d) { return derivation_json(d); }

json to_json(const CoxeterGraph& g, const CenterDescription& c) {
  json comps = json::array();
  for (const ComponentCenter& comp : c.components) {
    json jc;
    jc["vertices"] = comp.vertices;
    switch (comp.status) {
      case ComponentCenter::Status::InfiniteCyclic:
        jc["status"] = "infinite_cyclic";
        jc["generator"] = format_group_word(g, comp.generator);
        break;
      case ComponentCenter::Status::Trivial:
        jc["status"] = "trivial";
        jc["derivation"] = derivation_json(*comp.derivation);
        break;
      case ComponentCenter::Status::Conditional:
        jc["status"] = "conditional";
        jc["assumption"] = comp.assumption;
        jc["derivation"] = derivation_json(*comp.derivation);
        break;
    }
    comps.push_back(std::move(jc));
  }
  return json{{"kind", "center_description"},
              {"components", std::move(comps)},
              {"product_statement", c.product_statement}};
}

json to_json(const TorsionCertificate& c) {
  return json{{"kind", "torsion_certificate"},
              {"unconditional", c.unconditional()},
              {"assumptions", c.assumptions},
              {"tree", torsion_node_json(c.root)}};
}

CenterDerivation center_derivation_from_json(const json& j) {
  try {
    return std::move(*derivation_from(j));
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad derivation document: ") + e.what());
  }
}

CenterDescription center_description_from_json(const json& j, const CoxeterGraph& g) {
  try {
    if (j.at("kind").get<std::string>() != "center_description")
      fail(ErrorCode::ParseError, "document is not a center description");
    CenterDescription out;
    for (const json& jc : j.at("components")) {
      ComponentCenter& c = out.components.emplace_back();
      c.vertices = name_list(jc.at("vertices"));
      std::string status = jc.at("status").get<std::string>();
      if (status == "infinite_cyclic") {
        c.status = ComponentCenter::Status::InfiniteCyclic;
        c.generator = parse_group_word(g, jc.at("generator").get<std::string>());
      } else if (status == "trivial") {
        c.status = ComponentCenter::Status::Trivial;
        c.derivation = derivation_from(jc.at("derivation"));
      } else if (status == "conditional") {
        c.status = ComponentCenter::Status::Conditional;
        c.assumption = jc.at("assumption").get<std::string>();
        c.derivation = derivation_from(jc.at("derivation"));
      } else {
        fail(ErrorCode::ParseError, "unknown component status '" + status + "'");
      }
    }
    out.product_statement = j.at("product_statement").get<std::string>();
    return out;
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad center description document: ") + e.what());
  }
}

TorsionCertificate torsion_certificate_from_json(const json& j) {
  try {
    if (j.at("kind").get<std::string>() != "torsion_certificate")
      fail(ErrorCode::ParseError, "document is not a torsion certificate");
    TorsionCertificate out;
    out.root = torsion_node_from(j.at("tree"));
    out.assumptions = name_list(j.at("assumptions"));
    return out;
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad torsion certificate document: ") + e.what());
  }
}

}  // namespace artin
