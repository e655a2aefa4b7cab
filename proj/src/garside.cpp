#include "artin/garside.hpp"

#include <algorithm>

#include "artin/classification.hpp"

namespace artin {

VertexSet support(const PositiveWord& w) {
  VertexSet out;
  for (int v : w) out.add(v);
  return out;
}

GarsideSolver::GarsideSolver(CoxeterGraph graph, SolverLimits limits)
    : cox_(std::move(graph), limits.word_cap), limits_(limits) {
  if (!is_spherical(cox_.graph()))
    fail(ErrorCode::NotSpherical, "Garside machinery requires a finite-type graph");
  w0_ = parabolic_longest(cox_.graph().all_vertices());
}

void GarsideSolver::check_length(const GroupWord& w) const {
  if (w.size() > limits_.max_input_letters)
    fail(ErrorCode::ResourceLimit,
         "input word exceeds the cap of " + std::to_string(limits_.max_input_letters) +
             " letters");
}

/// Longest element of the parabolic on `sub`, by greedy ascent: repeatedly
/// append a generator that lengthens the word.
const CoxWord& GarsideSolver::parabolic_longest(VertexSet sub) const {
  auto it = parabolic_w0_.find(sub);
  if (it != parabolic_w0_.end()) return it->second;
  CoxWord u;
  for (;;) {
    bool grew = false;
    for (int s : sub.elements()) {
      CoxWord us = u;
      us.push_back(s);
      CoxWord c = cox_.canonical(us);
      if (c.size() > u.size()) {
        u = std::move(c);
        grew = true;
        break;
      }
    }
    if (!grew) break;
  }
  return parabolic_w0_.emplace(sub, std::move(u)).first->second;
}

const std::vector<CoxWord>& GarsideSolver::parabolic_group(VertexSet sub) const {
  auto it = parabolic_elements_.find(sub);
  if (it != parabolic_elements_.end()) return it->second;
  CoxeterSystem inner(cox_.graph().induced(sub), cox_.word_cap());
  auto enumeration = inner.enumerate(limits_.element_cap);
  if (!enumeration.complete)
    fail(ErrorCode::ResourceLimit, "parabolic subgroup enumeration exceeded the cap of " +
                                       std::to_string(limits_.element_cap) + " elements");
  // translate back to ambient vertex indices
  auto verts = sub.elements();
  std::vector<CoxWord> elements;
  for (const auto& e : enumeration.elements) {
    CoxWord w;
    for (int v : e) w.push_back(verts[v]);
    elements.push_back(cox_.canonical(w));
  }
  return parabolic_elements_.emplace(sub, std::move(elements)).first->second;
}

bool GarsideSolver::left_descent(int s, const CoxWord& x) const {
  CoxWord sx;
  sx.reserve(x.size() + 1);
  sx.push_back(s);
  sx.insert(sx.end(), x.begin(), x.end());
  return cox_.canonical(sx).size() < x.size();
}

bool GarsideSolver::right_descent(const CoxWord& x, int s) const {
  CoxWord xs = x;
  xs.push_back(s);
  return cox_.canonical(xs).size() < x.size();
}

CoxWord GarsideSolver::twist(const CoxWord& simple) const {
  CoxWord w = w0_;
  w.insert(w.end(), simple.begin(), simple.end());
  w.insert(w.end(), w0_.begin(), w0_.end());
  return cox_.canonical(w);
}

CoxWord GarsideSolver::complement(const CoxWord& simple) const {
  CoxWord w = CoxeterSystem::inverse(simple);
  w.insert(w.end(), w0_.begin(), w0_.end());
  return cox_.canonical(w);
}

/// Transfers left descents of y across to x while they lengthen x.  On exit
/// every left descent of y is a right descent of x, which is exactly the
/// left-weighted condition for a pair of simple factors.
bool GarsideSolver::make_left_weighted(CoxWord& x, CoxWord& y) const {
  bool moved = false;
  bool progress = true;
  while (progress && !y.empty()) {
    progress = false;
    for (int s = 0; s < cox_.graph().rank(); ++s) {
      if (!left_descent(s, y)) continue;
      if (right_descent(x, s)) continue;
      CoxWord xs = x;
      xs.push_back(s);
      x = cox_.canonical(xs);
      CoxWord sy;
      sy.push_back(s);
      sy.insert(sy.end(), y.begin(), y.end());
      y = cox_.canonical(sy);
      moved = true;
      progress = true;
      break;
    }
  }
  return moved;
}

GarsideNormalForm GarsideSolver::raw_form(const GroupWord& w) const {
  GarsideNormalForm nf;
  for (int letter : w) {
    int v = letter_vertex(letter);
    if (v < 0 || v >= cox_.graph().rank())
      fail(ErrorCode::InvalidArgument, "word letter out of range");
    if (letter_positive(letter)) {
      nf.factors.push_back(CoxWord{v});
    } else {
      // sigma_v^-1 = Delta^-1 * lift(w0 v); the Delta^-1 travels to the
      // front, twisting every factor it passes.
      nf.infimum -= 1;
      for (auto& f : nf.factors) f = twist(f);
      CoxWord tail = w0_;
      tail.push_back(v);
      nf.factors.push_back(cox_.canonical(tail));
    }
  }
  return nf;
}

void GarsideSolver::normalize(GarsideNormalForm& nf) const {
  auto& F = nf.factors;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < F.size();) {
      if (F[i].empty()) {
        F.erase(F.begin() + i);
        changed = true;
      } else if (F[i] == w0_) {
        nf.infimum += 1;
        for (size_t j = 0; j < i; ++j) F[j] = twist(F[j]);
        F.erase(F.begin() + i);
        changed = true;
      } else {
        ++i;
      }
    }
    for (size_t i = 0; i + 1 < F.size(); ++i)
      if (make_left_weighted(F[i], F[i + 1])) changed = true;
  }
}

GarsideNormalForm GarsideSolver::normal_form(const GroupWord& w) const {
  check_length(w);
  GarsideNormalForm nf = raw_form(w);
  normalize(nf);
  return nf;
}

bool GarsideSolver::is_trivial(const GroupWord& w) const { return normal_form(w).trivial(); }

bool GarsideSolver::equal(const GroupWord& a, const GroupWord& b) const {
  return normal_form(a) == normal_form(b);
}

PositiveWord GarsideSolver::positive_word_of(const GarsideNormalForm& nf) const {
  if (nf.infimum < 0) fail(ErrorCode::Internal, "negative infimum has no positive word");
  PositiveWord out;
  for (int i = 0; i < nf.infimum; ++i) out.insert(out.end(), w0_.begin(), w0_.end());
  for (const auto& f : nf.factors) out.insert(out.end(), f.begin(), f.end());
  return out;
}

PositiveWord GarsideSolver::center_generator() const {
  const CoxeterGraph& g = cox_.graph();
  if (g.rank() == 0 || g.components().size() != 1)
    fail(ErrorCode::NotConnected, "center generator is defined for connected graphs");

  GroupWord delta = lift(w0_);
  GroupWord delta_inv = artin::inverse(delta);
  auto commutes = [&](const GroupWord& z, const GroupWord& z_inv) {
    for (int v = 0; v < g.rank(); ++v) {
      GroupWord comm = z;
      comm.push_back(positive_letter(v));
      comm.insert(comm.end(), z_inv.begin(), z_inv.end());
      comm.push_back(inverse_letter(v));
      GarsideNormalForm nf = raw_form(comm);
      normalize(nf);
      if (!nf.trivial()) return false;
    }
    return true;
  };

  if (commutes(delta, delta_inv)) return w0_;

  int h = coxeter_number(g);
  PositiveWord z;
  for (int k = 0; k < h; ++k)
    for (int v = 0; v < g.rank(); ++v) z.push_back(v);
  GroupWord zl = lift(z);
  if (!commutes(zl, artin::inverse(zl)))
    fail(ErrorCode::Internal, "center candidate fails to commute");
  return z;
}

std::optional<PositiveWord> GarsideSolver::divide_left(int s, const PositiveWord& w) const {
  GroupWord q;
  q.push_back(inverse_letter(s));
  for (int v : w) q.push_back(positive_letter(v));
  GarsideNormalForm nf = raw_form(q);
  normalize(nf);
  if (nf.infimum < 0) return std::nullopt;
  return positive_word_of(nf);
}

NpPair GarsideSolver::np_decompose(const GroupWord& w) const {
  GarsideNormalForm nf = normal_form(w);
  NpPair out;
  if (nf.infimum >= 0) {
    out.positive = positive_word_of(nf);
    return out;
  }
  int q = -nf.infimum;
  // w = Delta^-q x_1...x_r; the maximal common left divisor of Delta^q and
  // x_1...x_r is the product of the first min(q, r) factors.  Cancelling it
  // leaves a coprime pair.
  int take = std::min<int>(q, static_cast<int>(nf.factors.size()));
  GroupWord head;
  for (int i = 0; i < take; ++i) {
    const auto& f = nf.factors[i];
    for (int v : f) head.push_back(positive_letter(v));
  }
  GroupWord head_inv = artin::inverse(head);

  GroupWord neg = head_inv;
  for (int i = 0; i < q; ++i)
    for (int v : w0_) neg.push_back(positive_letter(v));
  GarsideNormalForm neg_nf = raw_form(neg);
  normalize(neg_nf);
  if (neg_nf.infimum < 0) fail(ErrorCode::Internal, "np negative part failed to be positive");
  out.negative = positive_word_of(neg_nf);

  // The remaining factors are exactly head^-1 * x_1...x_r.
  GroupWord pos;
  for (size_t i = take; i < nf.factors.size(); ++i)
    for (int v : nf.factors[i]) pos.push_back(positive_letter(v));
  GarsideNormalForm pos_nf = raw_form(pos);
  normalize(pos_nf);
  if (pos_nf.infimum < 0) fail(ErrorCode::Internal, "np positive part failed to be positive");
  out.positive = positive_word_of(pos_nf);
  return out;
}

std::optional<GroupWord> GarsideSolver::member_rewrite(const GroupWord& w, VertexSet sub) const {
  check_length(w);
  NpPair np = np_decompose(w);
  if (!support(np.negative).subset_of(sub) || !support(np.positive).subset_of(sub))
    return std::nullopt;
  GroupWord result = artin::inverse(lift(np.negative));
  GroupWord pos = lift(np.positive);
  result.insert(result.end(), pos.begin(), pos.end());

  GroupWord check = w;
  GroupWord result_inv = artin::inverse(result);
  check.insert(check.end(), result_inv.begin(), result_inv.end());
  GarsideNormalForm nf = raw_form(check);
  normalize(nf);
  if (!nf.trivial()) fail(ErrorCode::Internal, "parabolic rewriting failed verification");
  return result;
}

/// Greedy maximal left divisor of a positive word lying in the parabolic on
/// p_set: keep dividing off parabolic generators while any divides.
PositiveWord GarsideSolver::max_parabolic_head(PositiveWord w, VertexSet p_set,
                                               PositiveWord* rest) const {
  PositiveWord head;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int s : p_set.elements()) {
      if (auto quotient = divide_left(s, w)) {
        head.push_back(s);
        w = std::move(*quotient);
        progress = true;
        break;
      }
    }
  }
  *rest = std::move(w);
  return head;
}

GarsideSolver::FactorResult GarsideSolver::factor_over_pair(const GroupWord& w, VertexSet p_set,
                                                            VertexSet q_set) const {
  // Finite-quotient obstruction: the image of w in the Coxeter group must
  // factor over the corresponding parabolic subgroups.
  CoxWord image = cox_.canonical(shadow(w));
  bool quotient_ok = false;
  for (const CoxWord& p : parabolic_group(p_set)) {
    CoxWord rest = cox_.product(CoxeterSystem::inverse(p), image);
    if (support(rest).subset_of(q_set)) {
      quotient_ok = true;
      break;
    }
  }
  if (!quotient_ok) return {FactorStatus::Impossible, {}, {}};

  // Split w = n^-1 m into coprime positive parts.  If w = p q with p over P
  // and q over Q, then some positive padding Delta_P^j w Delta_Q^m lands in
  // the monoid, and conversely a positive element factors over the pair if
  // and only if it factors inside the monoid, where the maximal head over P
  // witnesses it.  So first decide whether any padding can make w positive:
  // right multiplication by the monoid over Q absorbs a left divisor g of n
  // exactly when the reduced right fraction of g^-1 m has a Q-supported
  // denominator, the absorbable divisors are closed under joins, and the
  // left padding must cover whatever remains.  A residue outside P proves
  // no padding ever goes positive, hence no factorization exists.
  auto reversed = [](const GroupWord& u) { return GroupWord(u.rbegin(), u.rend()); };
  // Denominator of the reduced right fraction u = x z^-1: reversing a word
  // is an anti-automorphism, so it swaps the two fraction sides.
  auto right_denominator = [&](const GroupWord& u) {
    NpPair rev_np = np_decompose(reversed(u));
    return PositiveWord(rev_np.negative.rbegin(), rev_np.negative.rend());
  };
  auto sup_of = [&](const PositiveWord& u) {
    GarsideNormalForm nf = raw_form(lift(u));
    normalize(nf);
    return nf.infimum + static_cast<int>(nf.factors.size());
  };

  NpPair np = np_decompose(w);
  PositiveWord n_res = np.negative;
  GroupWord frac = lift(np.positive);  // g^-1 m for the absorbed prefix g of n
  for (bool grew = true; grew;) {
    grew = false;
    for (int a : graph().all_vertices().elements()) {
      auto rest = divide_left(a, n_res);
      if (!rest) continue;
      GroupWord cand;
      cand.push_back(inverse_letter(a));
      cand.insert(cand.end(), frac.begin(), frac.end());
      if (!support(right_denominator(cand)).subset_of(q_set)) continue;
      n_res = *rest;
      frac = std::move(cand);
      grew = true;
      break;
    }
  }
  if (!support(n_res).subset_of(p_set)) return {FactorStatus::Impossible, {}, {}};

  const CoxWord& dp = parabolic_longest(p_set);
  const CoxWord& dq = parabolic_longest(q_set);
  int j = sup_of(n_res);
  int m = sup_of(right_denominator(frac));

  GroupWord padded;
  for (int i = 0; i < j; ++i)
    for (int v : dp) padded.push_back(positive_letter(v));
  padded.insert(padded.end(), w.begin(), w.end());
  for (int i = 0; i < m; ++i)
    for (int v : dq) padded.push_back(positive_letter(v));

  GarsideNormalForm nf = raw_form(padded);
  normalize(nf);
  if (nf.infimum < 0) fail(ErrorCode::Internal, "padded factorization candidate not positive");
  PositiveWord v = positive_word_of(nf);
  PositiveWord rest;
  PositiveWord head = max_parabolic_head(std::move(v), p_set, &rest);
  if (!support(rest).subset_of(q_set)) return {FactorStatus::Impossible, {}, {}};

  FactorResult out{FactorStatus::Found, {}, {}};
  for (int i = 0; i < j; ++i)
    for (auto it = dp.rbegin(); it != dp.rend(); ++it)
      out.left.push_back(inverse_letter(*it));
  for (int x : head) out.left.push_back(positive_letter(x));
  for (int x : rest) out.right.push_back(positive_letter(x));
  for (int i = 0; i < m; ++i)
    for (auto it = dq.rbegin(); it != dq.rend(); ++it)
      out.right.push_back(inverse_letter(*it));

  GroupWord check = w;
  GroupWord fact = out.left;
  fact.insert(fact.end(), out.right.begin(), out.right.end());
  GroupWord fact_inv = artin::inverse(fact);
  check.insert(check.end(), fact_inv.begin(), fact_inv.end());
  GarsideNormalForm cf = raw_form(check);
  normalize(cf);
  if (!cf.trivial()) fail(ErrorCode::Internal, "pair factorization failed verification");
  return out;
}

}  // namespace artin
