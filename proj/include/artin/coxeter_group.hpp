#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/coxeter_graph.hpp"
#include "artin/words.hpp"

namespace artin {

struct EnumerationResult {
  bool complete = false;          // false: the cap was hit (the group may be infinite)
  std::vector<CoxWord> elements;  // canonical words, ShortLex order; empty when incomplete
  std::size_t order = 0;          // meaningful only when complete
  std::size_t cap = 0;
};

inline constexpr std::size_t default_element_cap = 200000;
inline constexpr std::size_t default_word_cap = 1000000;

/// Word arithmetic in the Coxeter group of a graph, by exhaustive closure
/// under braid moves and deletion of equal adjacent letters (Tits).  Both
/// kinds of move only ever shorten or preserve words, so the closure of a
/// word is finite and contains the empty word exactly when the word is
/// trivial.  Canonical forms are ShortLex-least words; results are cached.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterGraph graph, std::size_t word_cap = default_word_cap);

  const CoxeterGraph& graph() const { return graph_; }
  std::size_t word_cap() const { return word_cap_; }
  void set_word_cap(std::size_t cap) { word_cap_ = cap; }

  /// ShortLex-least word representing the same group element.
  CoxWord canonical(const CoxWord& w) const;

  bool is_identity(const CoxWord& w) const { return canonical(w).empty(); }

  /// Coxeter length (length of any reduced expression).
  int length(const CoxWord& w) const { return static_cast<int>(canonical(w).size()); }

  /// Canonical form of the product of two elements given by words.
  CoxWord product(const CoxWord& a, const CoxWord& b) const;

  /// In a Coxeter group every generator is an involution, so the inverse of
  /// a word is its reversal.
  static CoxWord inverse(CoxWord w);

  /// Breadth-first closure of the group under right multiplication.
  EnumerationResult enumerate(std::size_t cap = default_element_cap) const;

  /// Least k >= 1 with w^k trivial, or nullopt when not found within
  /// `max_power` iterations.
  std::optional<int> order_of(const CoxWord& w, int max_power = 4096) const;

 private:
  CoxeterGraph graph_;
  std::size_t word_cap_;
  mutable std::unordered_map<std::string, std::string> canon_cache_;

  std::string canonical_packed(const std::string& w) const;
};

/// Order of the product of all generators in declaration order.  The value
/// does not depend on the ordering.  Requires a connected spherical graph.
int coxeter_number(const CoxeterGraph& g);

}  // namespace artin
