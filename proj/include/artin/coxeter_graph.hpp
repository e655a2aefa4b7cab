#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

/// Label value used for an unbounded multiplicity.  It compares greater than
/// every finite label, so threshold checks like `label >= 3` behave naturally.
inline constexpr int infinity_label = std::numeric_limits<int>::max();

/// Set of vertex indices of one graph, stored as a bitmask.  Graphs are capped
/// at 64 vertices, far above the intended working range.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet full(int rank) {
    return VertexSet(rank == 64 ? ~0ull : ((1ull << rank) - 1));
  }
  static VertexSet single(int v) { return VertexSet(1ull << v); }

  bool contains(int v) const { return (bits_ >> v) & 1; }
  void add(int v) { bits_ |= 1ull << v; }
  void remove(int v) { bits_ &= ~(1ull << v); }
  bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcountll(bits_); }
  std::uint64_t bits() const { return bits_; }

  bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  VertexSet intersect(VertexSet other) const { return VertexSet(bits_ & other.bits_); }
  VertexSet unite(VertexSet other) const { return VertexSet(bits_ | other.bits_); }
  VertexSet minus(VertexSet other) const { return VertexSet(bits_ & ~other.bits_); }

  /// Ascending list of member indices.
  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }

  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
  friend bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

struct LabeledEdge {
  std::string a;
  std::string b;
  int label;  // >= 3 or infinity_label; label-2 pairs are implicit
};

/// Finite simplicial graph with edge multiplicities in {2,3,...} U {infinity}.
/// Every unordered pair of distinct vertices carries a label; pairs without a
/// stored edge carry the implicit label 2.  Edges in the graph-theoretic sense
/// (components, adjacency) are exactly the pairs with label >= 3.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  CoxeterGraph(std::vector<std::string> vertices, const std::vector<LabeledEdge>& edges);

  /// Parses the textual format:
  ///   # comment
  ///   vertices: s t u
  ///   edge: s t 3
  ///   edge: t u inf
  /// Throws Error(ParseError) with line/column context on malformed input.
  static CoxeterGraph parse(const std::string& text);

  /// Inverse of parse up to label-2 edge elision: vertices in declaration
  /// order, edges with label >= 3 sorted by name pair.
  std::string serialize() const;

  int rank() const { return static_cast<int>(vertices_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  std::optional<int> index_of(const std::string& name) const;
  /// Like index_of but throws Error(InvalidArgument) when absent.
  int require_index(const std::string& name) const;

  int label(int a, int b) const { return labels_[a * rank() + b]; }
  bool has_infinite_label() const;

  /// Subgraph spanned by `keep`, vertex order inherited from this graph.
  CoxeterGraph induced(VertexSet keep) const;
  CoxeterGraph induced(const std::vector<std::string>& names) const;

  /// Connected components (adjacency = label >= 3, including infinity),
  /// ordered by smallest member index.
  std::vector<VertexSet> components() const;

  VertexSet all_vertices() const { return VertexSet::full(rank()); }
  VertexSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(VertexSet set) const;

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.vertices_ == b.vertices_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<int> labels_;  // rank x rank, symmetric, diagonal unused (0)

  void set_label(int a, int b, int m) {
    labels_[a * rank() + b] = m;
    labels_[b * rank() + a] = m;
  }
};

}  // namespace artin
