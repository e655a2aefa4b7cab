#include "artin/words.hpp"

#include <sstream>

namespace artin {

GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

GroupWord lift(const CoxWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (int v : w) out.push_back(positive_letter(v));
  return out;
}

CoxWord shadow(const GroupWord& w) {
  CoxWord out;
  out.reserve(w.size());
  for (int letter : w) out.push_back(letter_vertex(letter));
  return out;
}

bool is_positive(const GroupWord& w) {
  for (int letter : w)
    if (letter < 0) return false;
  return true;
}

VertexSet letters_of(const GroupWord& w) {
  VertexSet out;
  for (int letter : w) out.add(letter_vertex(letter));
  return out;
}

CoxWord alternating_word(int a, int b, int m) {
  if (a == b) fail(ErrorCode::InvalidArgument, "alternating word needs distinct generators");
  if (m < 2 || m == infinity_label)
    fail(ErrorCode::InvalidArgument, "alternating word needs a finite multiplicity >= 2");
  CoxWord out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.push_back(i % 2 == 0 ? a : b);
  return out;
}

namespace {

std::vector<std::string> split(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

GroupWord parse_group_word(const CoxeterGraph& g, const std::string& text) {
  GroupWord out;
  for (const auto& tok : split(text)) {
    bool inv = false;
    std::string name = tok;
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
      inv = true;
      name.resize(name.size() - 3);
    }
    auto v = g.index_of(name);
    if (!v) fail(ErrorCode::ParseError, "unknown generator '" + tok + "' in word");
    out.push_back(inv ? inverse_letter(*v) : positive_letter(*v));
  }
  return out;
}

CoxWord parse_cox_word(const CoxeterGraph& g, const std::string& text) {
  CoxWord out;
  for (const auto& tok : split(text)) {
    auto v = g.index_of(tok);
    if (!v) fail(ErrorCode::ParseError, "unknown generator '" + tok + "' in word");
    out.push_back(*v);
  }
  return out;
}

std::string format_group_word(const CoxeterGraph& g, const GroupWord& w) {
  std::string out;
  for (int letter : w) {
    if (!out.empty()) out += ' ';
    out += g.vertex_name(letter_vertex(letter));
    if (letter < 0) out += "^-1";
  }
  return out;
}

std::string format_cox_word(const CoxeterGraph& g, const CoxWord& w) {
  std::string out;
  for (int v : w) {
    if (!out.empty()) out += ' ';
    out += g.vertex_name(v);
  }
  return out;
}

GroupWord remap_word(const CoxeterGraph& from, const CoxeterGraph& to, const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (int letter : w) {
    int v = to.require_index(from.vertex_name(letter_vertex(letter)));
    out.push_back(letter > 0 ? positive_letter(v) : inverse_letter(v));
  }
  return out;
}

}  // namespace artin
