#include "artin/coxeter_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "artin/classification.hpp"

namespace artin {

namespace {

std::string pack(const CoxWord& w) {
  std::string out(w.size(), '\0');
  for (size_t i = 0; i < w.size(); ++i) out[i] = static_cast<char>(w[i]);
  return out;
}

CoxWord unpack(const std::string& w) {
  CoxWord out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = w[i];
  return out;
}

}  // namespace

CoxeterSystem::CoxeterSystem(CoxeterGraph graph, std::size_t word_cap)
    : graph_(std::move(graph)), word_cap_(word_cap) {}

CoxWord CoxeterSystem::canonical(const CoxWord& w) const {
  for (int v : w)
    if (v < 0 || v >= graph_.rank())
      fail(ErrorCode::InvalidArgument, "word letter out of range");
  return unpack(canonical_packed(pack(w)));
}

namespace {

// Erases adjacent equal letters until none remain.  Sound in a Coxeter
// group (s^2 = 1) and cheap enough to run before any closure work.
void cancel_adjacent(std::string& w) {
  size_t out = 0;
  for (char c : w) {
    if (out > 0 && w[out - 1] == c)
      --out;
    else
      w[out++] = c;
  }
  w.resize(out);
}

}  // namespace

/// Braid-close the word; the moment any closure word shows an equal adjacent
/// pair, delete it and restart two letters shorter (the element is
/// unchanged).  Once a closure completes without a deletion the word is
/// reduced, the closure is the full family of its reduced expressions, and
/// the lexicographic minimum is the ShortLex-least word of the element.
std::string CoxeterSystem::canonical_packed(const std::string& w) const {
  if (auto it = canon_cache_.find(w); it != canon_cache_.end()) return it->second;

  std::size_t visited = 0;
  auto charge = [&](std::size_t n) {
    visited += n;
    if (visited > word_cap_)
      fail(ErrorCode::ResourceLimit,
           "word-set cap of " + std::to_string(word_cap_) + " exceeded while rewriting");
  };

  std::string current = w;
  for (;;) {
    cancel_adjacent(current);

    std::unordered_set<std::string> closure = {current};
    std::deque<std::string> queue = {current};
    charge(1);
    std::optional<std::string> shortened;

    while (!queue.empty() && !shortened) {
      std::string u = std::move(queue.front());
      queue.pop_front();
      int n = static_cast<int>(u.size());
      for (int i = 0; i + 1 < n && !shortened; ++i) {
        char a = u[i], b = u[i + 1];
        if (a == b) {
          shortened = u.substr(0, i) + u.substr(i + 2);
          break;
        }
        int m = graph_.label(a, b);
        if (m == infinity_label || i + m > n) continue;
        bool match = true;
        for (int k = 2; k < m && match; ++k)
          if (u[i + k] != (k % 2 == 0 ? a : b)) match = false;
        if (!match) continue;
        std::string v = u;
        for (int k = 0; k < m; ++k) v[i + k] = (k % 2 == 0 ? b : a);
        if (closure.insert(v).second) {
          charge(1);
          queue.push_back(v);
        }
      }
    }

    if (!shortened) {
      std::string best = *std::min_element(closure.begin(), closure.end());
      canon_cache_.emplace(w, best);
      return best;
    }
    current = std::move(*shortened);
  }
}

CoxWord CoxeterSystem::product(const CoxWord& a, const CoxWord& b) const {
  CoxWord ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return canonical(ab);
}

CoxWord CoxeterSystem::inverse(CoxWord w) {
  std::reverse(w.begin(), w.end());
  return w;
}

EnumerationResult CoxeterSystem::enumerate(std::size_t cap) const {
  EnumerationResult result;
  result.cap = cap;

  std::unordered_set<std::string> seen = {""};
  std::deque<std::string> queue = {""};
  while (!queue.empty()) {
    std::string u = std::move(queue.front());
    queue.pop_front();
    for (int s = 0; s < graph_.rank(); ++s) {
      std::string us = u + static_cast<char>(s);
      std::string v = canonical_packed(us);
      if (seen.insert(v).second) {
        if (seen.size() > cap) return result;  // incomplete
        queue.push_back(v);
      }
    }
  }

  result.complete = true;
  result.order = seen.size();
  std::vector<std::string> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& s : sorted) result.elements.push_back(unpack(s));
  return result;
}

std::optional<int> CoxeterSystem::order_of(const CoxWord& w, int max_power) const {
  CoxWord base = canonical(w);
  CoxWord acc = base;
  for (int k = 1; k <= max_power; ++k) {
    if (acc.empty()) return k;
    if (k == max_power) break;
    acc = product(acc, base);
  }
  if (base.empty()) return 1;
  return std::nullopt;
}

int coxeter_number(const CoxeterGraph& g) {
  if (g.rank() == 0 || g.components().size() != 1)
    fail(ErrorCode::NotConnected, "Coxeter number requires a connected graph");
  if (!is_spherical(g)) fail(ErrorCode::NotSpherical, "Coxeter number requires finite type");
  CoxeterSystem cox(g);
  CoxWord c;
  for (int v = 0; v < g.rank(); ++v) c.push_back(v);
  auto h = cox.order_of(c);
  if (!h) fail(ErrorCode::Internal, "Coxeter element order not found in a finite group");
  return *h;
}

}  // namespace artin
