#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/coxeter_graph.hpp"
#include "artin/words.hpp"

namespace artin {

/// Machine-checkable derivation that a connected graph's group has trivial
/// center.  The interesting case splits along an unbounded edge (s,t) into
/// X = S \ {s} and Y = S \ {t}: with X1 the component of the X-subgraph
/// containing t, X2 = X \ X1, Y1 the component of the Y-subgraph containing
/// s, Y2 = Y \ Y1 and Z1 = X1 \ {t}, the center embeds into the subgroup on
/// X2, where triviality follows once the X1 and Y1 cases are settled.  Every
/// recorded set is recomputed by the verifier.
struct CenterDerivation {
  enum class Kind {
    InfinityEdge,         // split along an unbounded edge, two sub-cases
    SphericalAvoidance,   // connected finite type: center meets a proper
                          // standard parabolic trivially
    KnownClass,           // literature result for the recorded class
    Conditional,          // stated hypothesis, no proof available
  };
  Kind kind = Kind::Conditional;

  // InfinityEdge
  std::string edge_s, edge_t;
  std::vector<std::string> x, y, z, x1, x2, y1, y2, z1;
  bool x2_in_y1 = false;
  bool y2_in_x1 = false;
  std::unique_ptr<CenterDerivation> x1_case, y1_case;

  // SphericalAvoidance: Z(A_component) meets A_avoided trivially.
  std::vector<std::string> component, avoided;

  // KnownClass
  std::string known_class, reference;

  // Conditional
  std::string assumption;
};

struct ComponentCenter {
  enum class Status { InfiniteCyclic, Trivial, Conditional };
  std::vector<std::string> vertices;
  Status status = Status::Trivial;
  GroupWord generator;     // InfiniteCyclic, letters index the ambient graph
  std::string assumption;  // Conditional
  std::unique_ptr<CenterDerivation> derivation;  // Trivial and Conditional
};

/// Center of the whole group as the product over connected components.
struct CenterDescription {
  std::vector<ComponentCenter> components;
  std::string product_statement;

  /// No component's status rests on an unproven hypothesis.
  bool unconditional() const;
};

CenterDescription center_description(const CoxeterGraph& g);

/// Recomputes every fact a derivation records against the connected graph it
/// was produced for: the unbounded edge, the eight vertex sets, both
/// inclusions, and the shape of the sub-cases.  Returns false when any
/// recorded fact fails; throws Error(InvalidArgument) with a node path when
/// the derivation is structurally malformed.
bool verify_center_derivation(const CoxeterGraph& g, const CenterDerivation& d);

/// Torsion-freeness certificate shaped like the decomposition tree: finite
/// order elements of an amalgamated product are conjugate into a factor, so
/// torsion-freeness propagates from the leaves.
struct TorsionNode {
  bool leaf = true;
  std::vector<std::string> vertices;

  // split node
  std::string edge_s, edge_t;
  std::string reason;
  std::unique_ptr<TorsionNode> left, right;

  // leaf
  enum class Status { SphericalTorsionFree, AssumedTorsionFree };
  Status status = Status::SphericalTorsionFree;
  std::string reference;   // SphericalTorsionFree
  std::string assumption;  // AssumedTorsionFree
  std::string note;        // optional remark (e.g. a class result covering the leaf)
};

struct TorsionCertificate {
  TorsionNode root;
  std::vector<std::string> assumptions;  // distinct labels, in discovery order

  bool unconditional() const { return assumptions.empty(); }
};

TorsionCertificate torsion_certificate(const CoxeterGraph& g);

/// Structural check mirroring verify_center_derivation: recomputes the
/// decomposition tree of g and compares edges, vertex sets and leaf statuses.
bool verify_torsion_certificate(const CoxeterGraph& g, const TorsionCertificate& c);

// JSON forms (schemas documented in docs/formats.md).  Graph parameters
// carry the vertex names used to print and re-parse generator words.
nlohmann::json to_json(const CenterDerivation& d);
nlohmann::json to_json(const CoxeterGraph& g, const CenterDescription& c);
nlohmann::json to_json(const TorsionCertificate& c);
CenterDerivation center_derivation_from_json(const nlohmann::json& j);
CenterDescription center_description_from_json(const nlohmann::json& j, const CoxeterGraph& g);
TorsionCertificate torsion_certificate_from_json(const nlohmann::json& j);

}  // namespace artin
