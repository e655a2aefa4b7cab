#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "artin/coxeter_group.hpp"
#include "artin/words.hpp"

namespace artin {

/// Positive word in the Artin-Tits monoid: a sequence of vertex indices.
/// Defining relations preserve the letter set, so the set of letters is an
/// invariant of the monoid element.
using PositiveWord = CoxWord;

/// Letter set of a positive word (an invariant of the monoid element).
VertexSet support(const PositiveWord& w);

/// Left-greedy normal form Delta^infimum x_1 ... x_k.  Factors are canonical
/// reduced words for proper simple elements (never empty, never the full
/// Garside word), each adjacent pair left-weighted.  Two words represent the
/// same group element exactly when their normal forms are identical.
struct GarsideNormalForm {
  int infimum = 0;
  std::vector<CoxWord> factors;

  bool trivial() const { return infimum == 0 && factors.empty(); }
  int supremum() const { return infimum + static_cast<int>(factors.size()); }
  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

/// Fraction form w = negative^-1 * positive with both parts positive words
/// sharing no common left divisor.
struct NpPair {
  PositiveWord negative;
  PositiveWord positive;
};

struct SolverLimits {
  /// Cap on the letter count of words accepted by the public entry points.
  std::size_t max_input_letters = 64;
  /// Work cap handed to the underlying Coxeter word rewriting.
  std::size_t word_cap = default_word_cap;
  /// Cap on Coxeter group enumerations (factor_over_pair's quotient test).
  std::size_t element_cap = default_element_cap;
};

/// Word problem and divisibility machinery for the Artin-Tits group of a
/// spherical-type graph (connected or not).  Simple elements are represented
/// by canonical reduced words of the Coxeter group; products, descents and
/// complements all route through CoxeterSystem arithmetic.
class GarsideSolver {
 public:
  explicit GarsideSolver(CoxeterGraph graph, SolverLimits limits = {});

  const CoxeterGraph& graph() const { return cox_.graph(); }
  const CoxeterSystem& coxeter() const { return cox_; }

  /// Positive lift of the longest element; the Garside element of each
  /// connected component multiplied together.
  const PositiveWord& delta_word() const { return w0_; }

  GarsideNormalForm normal_form(const GroupWord& w) const;
  bool is_trivial(const GroupWord& w) const;
  bool equal(const GroupWord& a, const GroupWord& b) const;

  /// Word generating the center of the group of a *connected* spherical
  /// graph: Delta itself when it is central, otherwise Delta^2 written as
  /// (sigma_1 ... sigma_n)^h with h the Coxeter number.
  PositiveWord center_generator() const;

  NpPair np_decompose(const GroupWord& w) const;

  /// Membership in the standard parabolic subgroup on `sub`: w lies in it
  /// exactly when both parts of its np-pair only use letters of `sub`.
  /// Returns a rewriting of w over `sub`, or nullopt.
  std::optional<GroupWord> member_rewrite(const GroupWord& w, VertexSet sub) const;

  enum class FactorStatus { Found, Impossible };
  struct FactorResult {
    FactorStatus status;
    GroupWord left;   // over p_set
    GroupWord right;  // over q_set
  };
  /// Decides w = left * right with left in the parabolic subgroup on p_set
  /// and right in the one on q_set.  A factorization exists if and only if
  /// some padding Delta_P^j w Delta_Q^m is a positive element that splits
  /// inside the monoid, and the needed padding is computed, not searched
  /// for, so the answer is always definite.  Found results are verified.
  FactorResult factor_over_pair(const GroupWord& w, VertexSet p_set, VertexSet q_set) const;

  // --- simple-element arithmetic (exposed for tests) ---
  CoxWord twist(const CoxWord& simple) const;       // conjugation by Delta
  CoxWord complement(const CoxWord& simple) const;  // x^-1 Delta
  PositiveWord positive_word_of(const GarsideNormalForm& nf) const;

 private:
  CoxeterSystem cox_;
  SolverLimits limits_;
  CoxWord w0_;
  mutable std::map<VertexSet, CoxWord> parabolic_w0_;
  mutable std::map<VertexSet, std::vector<CoxWord>> parabolic_elements_;

  void check_length(const GroupWord& w) const;
  bool left_descent(int s, const CoxWord& x) const;
  bool right_descent(const CoxWord& x, int s) const;
  bool make_left_weighted(CoxWord& x, CoxWord& y) const;
  void normalize(GarsideNormalForm& nf) const;
  GarsideNormalForm raw_form(const GroupWord& w) const;
  const CoxWord& parabolic_longest(VertexSet sub) const;
  const std::vector<CoxWord>& parabolic_group(VertexSet sub) const;
  std::optional<PositiveWord> divide_left(int s, const PositiveWord& w) const;
  PositiveWord max_parabolic_head(PositiveWord w, VertexSet p_set, PositiveWord* rest) const;
};

}  // namespace artin
