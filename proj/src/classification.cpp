#include "artin/classification.hpp"

#include <algorithm>
#include <functional>

namespace artin {

namespace {

struct CatalogGraph {
  std::string name;
  int rank;
  // label list over index pairs; pairs not listed are 2
  std::vector<std::tuple<int, int, int>> edges;
};

CatalogGraph path_graph(std::string name, const std::vector<int>& labels) {
  CatalogGraph g{std::move(name), static_cast<int>(labels.size()) + 1, {}};
  for (size_t i = 0; i < labels.size(); ++i)
    g.edges.push_back({static_cast<int>(i), static_cast<int>(i) + 1, labels[i]});
  return g;
}

// Central vertex 0 with simple-laced branches of the given vertex counts.
CatalogGraph tripod_graph(std::string name, int a, int b, int c) {
  CatalogGraph g{std::move(name), 1 + a + b + c, {}};
  int next = 1;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      g.edges.push_back({prev, next, 3});
      prev = next++;
    }
  }
  return g;
}

/// Candidate catalog entries of the given rank.  `dihedral_label` is the
/// single multiplicity of the input when its rank is 2.
std::vector<CatalogGraph> catalog_candidates(int rank, int dihedral_label) {
  std::vector<CatalogGraph> out;
  if (rank < 1) return out;
  if (rank == 1) {
    out.push_back({"A1", 1, {}});
    return out;
  }
  if (rank == 2) {
    // A2, B2 and I2(m) are the dihedral entries; any finite label fits.
    if (dihedral_label != infinity_label) {
      std::string name = dihedral_label == 3   ? "A2"
                         : dihedral_label == 4 ? "B2"
                                               : "I2(" + std::to_string(dihedral_label) + ")";
      out.push_back({name, 2, {{0, 1, dihedral_label}}});
    }
    return out;
  }
  out.push_back(path_graph("A" + std::to_string(rank), std::vector<int>(rank - 1, 3)));
  {
    std::vector<int> labels(rank - 1, 3);
    labels.back() = 4;
    out.push_back(path_graph("B" + std::to_string(rank), labels));
  }
  if (rank >= 4) out.push_back(tripod_graph("D" + std::to_string(rank), 1, 1, rank - 3));
  if (rank == 6) out.push_back(tripod_graph("E6", 1, 2, 2));
  if (rank == 7) out.push_back(tripod_graph("E7", 1, 2, 3));
  if (rank == 8) out.push_back(tripod_graph("E8", 1, 2, 4));
  if (rank == 4) out.push_back(path_graph("F4", {3, 4, 3}));
  if (rank == 3) out.push_back(path_graph("H3", {5, 3}));
  if (rank == 4) out.push_back(path_graph("H4", {5, 3, 3}));
  return out;
}

/// Backtracking search for a label-preserving bijection catalog -> g.
bool isomorphic(const CatalogGraph& cat, const CoxeterGraph& g) {
  if (cat.rank != g.rank()) return false;
  int n = cat.rank;
  std::vector<std::vector<int>> want(n, std::vector<int>(n, 2));
  for (auto [a, b, m] : cat.edges) want[a][b] = want[b][a] = m;

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.label(image[u], w) != want[u][v]) ok = false;
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (place(v + 1)) return true;
      used[w] = false;
      image[v] = -1;
    }
    return false;
  };
  return place(0);
}

bool component_is_finite_type(const CoxeterGraph& g) {
  return !finite_type_name(g).empty();
}

}  // namespace

std::string finite_type_name(const CoxeterGraph& g) {
  if (g.rank() == 0) return "";
  if (g.components().size() != 1) return "";
  int dihedral = g.rank() == 2 ? g.label(0, 1) : 0;
  for (const auto& cat : catalog_candidates(g.rank(), dihedral))
    if (isomorphic(cat, g)) return cat.name;
  return "";
}

bool is_spherical(const CoxeterGraph& g) {
  if (g.rank() == 0) return true;  // the trivial group
  for (VertexSet comp : g.components())
    if (!component_is_finite_type(g.induced(comp))) return false;
  return true;
}

bool is_spherical(const CoxeterGraph& g, VertexSet subset) {
  return is_spherical(g.induced(subset));
}

ClassificationReport classify(const CoxeterGraph& g) {
  ClassificationReport rep;
  auto comps = g.components();
  rep.connected = comps.size() <= 1;
  for (VertexSet c : comps) rep.components.push_back(g.names_of(c));

  rep.free_of_infinity = !g.has_infinite_label();
  rep.spherical = is_spherical(g);

  rep.large = true;
  rep.extra_large = true;
  for (int a = 0; a < g.rank(); ++a)
    for (int b = a + 1; b < g.rank(); ++b) {
      if (g.label(a, b) < 3) rep.large = false;
      if (g.label(a, b) < 4) rep.extra_large = false;
    }

  // Subset sweeps; fine at the intended ranks (2^rank subsets).
  rep.fc_type = true;
  rep.two_dimensional = true;
  std::uint64_t full = g.all_vertices().bits();
  for (std::uint64_t bits = 0; bits <= full; ++bits) {
    if ((bits & ~full) != 0) continue;
    VertexSet sub{bits};
    CoxeterGraph ind = g.induced(sub);
    if (rep.fc_type && !ind.has_infinite_label() && !is_spherical(ind)) rep.fc_type = false;
    if (rep.two_dimensional && sub.count() >= 3 && is_spherical(ind)) rep.two_dimensional = false;
    if (!rep.fc_type && !rep.two_dimensional) break;
    if (bits == full) break;  // avoid overflow when rank == 64
  }
  return rep;
}

}  // namespace artin
