#pragma once

#include <string>
#include <vector>

#include "artin/coxeter_graph.hpp"

namespace artin {

struct ClassificationReport {
  bool connected = false;
  std::vector<std::vector<std::string>> components;  // vertex names, by first index
  bool spherical = false;        // every component matches the finite-type catalog
  bool free_of_infinity = false; // no unbounded multiplicity
  bool large = false;            // all multiplicities >= 3 (rank >= 2)
  bool extra_large = false;      // all multiplicities >= 4 (rank >= 2)
  bool fc_type = false;          // every free-of-infinity full subgraph is spherical
  bool two_dimensional = false;  // no spherical full subgraph on >= 3 vertices
};

/// Name of the catalog entry a connected graph matches (e.g. "A3", "I2(7)"),
/// or empty when the graph is not of finite type.
std::string finite_type_name(const CoxeterGraph& g);

/// True when the Coxeter group of g is finite.  Accepts disconnected graphs
/// (each component must match the catalog).
bool is_spherical(const CoxeterGraph& g);

bool is_spherical(const CoxeterGraph& g, VertexSet subset);

ClassificationReport classify(const CoxeterGraph& g);

}  // namespace artin
