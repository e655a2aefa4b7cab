#pragma once

#include <string>
#include <vector>

#include "artin/coxeter_graph.hpp"

namespace artin {

/// Word in the generators of a Coxeter group, or a positive word in the
/// corresponding monoid: a sequence of vertex indices.
using CoxWord = std::vector<int>;

/// Word in the group generators and their inverses.  A letter k > 0 stands
/// for the generator of vertex k-1, a letter k < 0 for its inverse.
using GroupWord = std::vector<int>;

inline int positive_letter(int vertex) { return vertex + 1; }
inline int inverse_letter(int vertex) { return -(vertex + 1); }
inline int letter_vertex(int letter) { return (letter > 0 ? letter : -letter) - 1; }
inline bool letter_positive(int letter) { return letter > 0; }

GroupWord inverse(const GroupWord& w);

/// Positive lift: each vertex index v becomes the letter v+1.
GroupWord lift(const CoxWord& w);

/// Forgets signs, mapping each letter to its vertex.
CoxWord shadow(const GroupWord& w);

bool is_positive(const GroupWord& w);

/// Vertices used by a word's letters.  CoxWord and GroupWord share their
/// underlying type, so this reads group-word letters; use garside.hpp's
/// support() for positive words in vertex-index form.
VertexSet letters_of(const GroupWord& w);

/// Alternating word a b a b ... of length m.  Requires 2 <= m < infinity and
/// a != b.
CoxWord alternating_word(int a, int b, int m);

/// Parses whitespace-separated tokens `name` / `name^-1` against g's vertex
/// names.  Throws Error(ParseError) on bad tokens.
GroupWord parse_group_word(const CoxeterGraph& g, const std::string& text);
CoxWord parse_cox_word(const CoxeterGraph& g, const std::string& text);

std::string format_group_word(const CoxeterGraph& g, const GroupWord& w);
std::string format_cox_word(const CoxeterGraph& g, const CoxWord& w);

/// Re-indexes a word between two graphs sharing vertex names.
GroupWord remap_word(const CoxeterGraph& from, const CoxeterGraph& to, const GroupWord& w);

}  // namespace artin
