#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artin/coxeter_graph.hpp"
#include "artin/garside.hpp"
#include "artin/words.hpp"

namespace artin {

/// Splitting of an Artin-Tits group along unbounded edges.  A graph with an
/// edge (s,t) of infinite multiplicity presents the group as the amalgamated
/// product of the parabolic subgroups on X = S \ {s} and Y = S \ {t} over the
/// one on Z = X intersect Y; the tree iterates this choice.
struct DecompositionTree {
  CoxeterGraph graph;

  // Leaf: graph is free of infinity.
  bool leaf = true;
  bool leaf_spherical = false;

  // Node: the split edge (s,t) with s,t vertex indices into `graph`.
  int edge_s = -1, edge_t = -1;
  VertexSet x, y, z;
  std::unique_ptr<DecompositionTree> left;   // subgraph on x
  std::unique_ptr<DecompositionTree> right;  // subgraph on y

  /// True when every leaf below is spherical, i.e. the word problem and
  /// membership machinery below are available for this graph.
  bool supported() const;
};

enum class EdgeChoice {
  LexSmallest,  // first unbounded edge in vertex declaration order
  LexLargest,   // last; used to test split independence
};

DecompositionTree decomposition_tree(const CoxeterGraph& g,
                                     EdgeChoice choice = EdgeChoice::LexSmallest);

/// Word in one factor of a node, tagged with that factor (1 = X side,
/// 2 = Y side).  Letters are indices into the node's graph.
struct Syllable {
  GroupWord word;
  int factor = 1;
};

using SyllabicExpression = std::vector<Syllable>;

struct ReducedForm {
  SyllabicExpression syllables;
  /// Number of syllables; equal for every reduction of the same element.
  int length() const { return static_cast<int>(syllables.size()); }
};

enum class ReductionStrategy { Leftmost, Rightmost };

/// Answers the reduction engine needs about the two factor groups of a node.
/// Words are given in the node graph's indexing.
struct FactorOracles {
  /// Word problem in the factor.
  std::function<bool(int factor, const GroupWord&)> is_trivial;
  /// Membership of a factor element in the edge subgroup on Z; on success
  /// returns an equivalent word over Z.
  std::function<std::optional<GroupWord>(int factor, const GroupWord&)> rewrite_to_base;
};

struct ReduceOptions {
  ReductionStrategy strategy = ReductionStrategy::Leftmost;
  std::vector<std::string>* trace = nullptr;
};

/// Applies elementary reductions until none fires: syllables trivial in
/// their factor are deleted, adjacent syllables of the same factor merge,
/// and a syllable lying in the edge subgroup is rewritten over Z and merged
/// into a neighbour.  Every step removes a syllable, and the length of the
/// result depends only on the group element.
ReducedForm reduce_syllabic(const DecompositionTree& node, SyllabicExpression expr,
                            const FactorOracles& oracles, const ReduceOptions& options = {});

/// Per-letter syllabification: a letter joins factor 1 exactly when its
/// vertex lies in X (so letters over Z default to the X side).
SyllabicExpression syllabify(const DecompositionTree& node, const GroupWord& w);

struct AmalgamOptions {
  EdgeChoice edge_choice = EdgeChoice::LexSmallest;
  ReductionStrategy strategy = ReductionStrategy::Leftmost;
  SolverLimits garside_limits{.max_input_letters = 4096, .word_cap = default_word_cap};
};

/// Word problem and standard-parabolic membership for graphs whose
/// decomposition bottoms out in spherical leaves.  Holds one Garside solver
/// per leaf and caches solvers for induced subgraphs encountered during
/// membership descent.  Instances are not thread-safe; use one per thread.
class AmalgamSolver {
 public:
  explicit AmalgamSolver(CoxeterGraph graph, AmalgamOptions options = {});

  const CoxeterGraph& graph() const { return graph_; }
  const DecompositionTree& tree() const { return tree_; }
  const AmalgamOptions& options() const { return options_; }

  bool is_trivial(const GroupWord& w, std::vector<std::string>* trace = nullptr) const;

  ReducedForm reduce(const GroupWord& w, std::vector<std::string>* trace = nullptr) const;

  /// Membership in the standard parabolic subgroup on `sub`; on success the
  /// returned word uses only letters of `sub` and is verified against w.
  std::optional<GroupWord> member_rewrite(const GroupWord& w, VertexSet sub,
                                          std::vector<std::string>* trace = nullptr) const;

  /// True when no query reachable from is_trivial or reduce can raise
  /// UnsupportedBaseCase, for any input word.  Conservative: a node whose
  /// membership sweep could cross a nested unbounded edge reports false even
  /// if no input word actually drives the sweep there.
  bool word_problem_supported() const;

 private:
  CoxeterGraph graph_;
  AmalgamOptions options_;
  DecompositionTree tree_;
  mutable std::unique_ptr<GarsideSolver> leaf_solver_;
  mutable std::unique_ptr<AmalgamSolver> left_solver_, right_solver_;
  mutable std::map<std::uint64_t, std::unique_ptr<AmalgamSolver>> subset_solvers_;
  mutable std::optional<bool> wp_supported_;

  const GarsideSolver& leaf() const;
  const AmalgamSolver& side(int factor) const;       // factor subgraph solver
  const AmalgamSolver& for_subset(VertexSet v) const;  // any induced subgraph

  FactorOracles oracles(std::vector<std::string>* trace) const;
  std::optional<GroupWord> member_at_node(const GroupWord& w, VertexSet sub,
                                          std::vector<std::string>* trace) const;
  std::optional<GroupWord> corank1_member(const GroupWord& w, int removed,
                                          std::vector<std::string>* trace) const;
  bool corank1_supported(int removed) const;
  void verify_member(const GroupWord& w, const GroupWord& rewritten) const;
};

}  // namespace artin
