#include "artin/coxeter_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace artin {

namespace {

std::string location(int line, int column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> split_tokens(const std::string& line) {
  std::vector<Token> out;
  int col = 1;
  std::string cur;
  int start = 0;
  for (int i = 0; i <= static_cast<int>(line.size()); ++i, ++col) {
    char c = i < static_cast<int>(line.size()) ? line[i] : ' ';
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back({cur, start});
      cur.clear();
    } else {
      if (cur.empty()) start = col;
      cur.push_back(c);
    }
  }
  return out;
}

}  // namespace

CoxeterGraph::CoxeterGraph(std::vector<std::string> vertices,
                           const std::vector<LabeledEdge>& edges) {
  if (vertices.size() > 64) fail(ErrorCode::InvalidArgument, "graphs are capped at 64 vertices");
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (!seen.insert(v).second)
      fail(ErrorCode::InvalidArgument, "duplicate vertex '" + v + "'");
  }
  vertices_ = std::move(vertices);
  labels_.assign(static_cast<size_t>(rank()) * rank(), 2);
  for (int v = 0; v < rank(); ++v) labels_[v * rank() + v] = 0;

  std::set<std::pair<int, int>> edge_seen;
  for (const auto& e : edges) {
    int a = require_index(e.a);
    int b = require_index(e.b);
    if (a == b) fail(ErrorCode::InvalidArgument, "self-loop at vertex '" + e.a + "'");
    if (e.label < 2) fail(ErrorCode::InvalidArgument, "label below 2 on edge " + e.a + " " + e.b);
    if (!edge_seen.insert({std::min(a, b), std::max(a, b)}).second)
      fail(ErrorCode::InvalidArgument, "duplicate edge " + e.a + " " + e.b);
    set_label(a, b, e.label);
  }
}

CoxeterGraph CoxeterGraph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_vertices = false;
  std::vector<std::string> vertices;
  std::vector<LabeledEdge> edges;
  std::set<std::string> vertex_set;
  std::set<std::pair<std::string, std::string>> pair_set;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    const auto& head = tokens[0];
    if (head.text == "vertices:") {
      if (have_vertices)
        fail(ErrorCode::ParseError, "second 'vertices:' line at " + location(line_no, head.column));
      have_vertices = true;
      if (tokens.size() == 1)
        fail(ErrorCode::ParseError, "empty vertex list at " + location(line_no, head.column));
      for (size_t i = 1; i < tokens.size(); ++i) {
        if (!vertex_set.insert(tokens[i].text).second)
          fail(ErrorCode::ParseError, "duplicate vertex '" + tokens[i].text + "' at " +
                                          location(line_no, tokens[i].column));
        vertices.push_back(tokens[i].text);
      }
    } else if (head.text == "edge:") {
      if (!have_vertices)
        fail(ErrorCode::ParseError,
             "'edge:' before 'vertices:' at " + location(line_no, head.column));
      if (tokens.size() != 4)
        fail(ErrorCode::ParseError, "expected 'edge: A B LABEL' at " + location(line_no, head.column));
      for (int k = 1; k <= 2; ++k) {
        if (!vertex_set.count(tokens[k].text))
          fail(ErrorCode::ParseError, "unknown vertex '" + tokens[k].text + "' at " +
                                          location(line_no, tokens[k].column));
      }
      if (tokens[1].text == tokens[2].text)
        fail(ErrorCode::ParseError,
             "self-loop at vertex '" + tokens[1].text + "' at " + location(line_no, tokens[1].column));
      auto key = std::minmax(tokens[1].text, tokens[2].text);
      if (!pair_set.insert(key).second)
        fail(ErrorCode::ParseError, "duplicate edge " + tokens[1].text + " " + tokens[2].text +
                                        " at " + location(line_no, tokens[1].column));
      int label = 0;
      const auto& lt = tokens[3];
      if (lt.text == "inf") {
        label = infinity_label;
      } else {
        size_t pos = 0;
        try {
          label = std::stoi(lt.text, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != lt.text.size() || label < 2)
          fail(ErrorCode::ParseError, "label must be an integer >= 2 or 'inf', got '" + lt.text +
                                          "' at " + location(line_no, lt.column));
      }
      edges.push_back({tokens[1].text, tokens[2].text, label});
    } else {
      fail(ErrorCode::ParseError,
           "unrecognized directive '" + head.text + "' at " + location(line_no, head.column));
    }
  }
  if (!have_vertices) fail(ErrorCode::ParseError, "missing 'vertices:' line");
  return CoxeterGraph(std::move(vertices), edges);
}

std::string CoxeterGraph::serialize() const {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : vertices_) out << ' ' << v;
  out << '\n';

  std::vector<std::pair<std::pair<std::string, std::string>, int>> edges;
  for (int a = 0; a < rank(); ++a)
    for (int b = a + 1; b < rank(); ++b)
      if (label(a, b) >= 3) {
        auto key = std::minmax(vertices_[a], vertices_[b]);
        edges.push_back({key, label(a, b)});
      }
  std::sort(edges.begin(), edges.end());
  for (const auto& [key, m] : edges) {
    out << "edge: " << key.first << ' ' << key.second << ' ';
    if (m == infinity_label)
      out << "inf";
    else
      out << m;
    out << '\n';
  }
  return out.str();
}

std::optional<int> CoxeterGraph::index_of(const std::string& name) const {
  for (int v = 0; v < rank(); ++v)
    if (vertices_[v] == name) return v;
  return std::nullopt;
}

int CoxeterGraph::require_index(const std::string& name) const {
  if (auto v = index_of(name)) return *v;
  fail(ErrorCode::InvalidArgument, "unknown vertex '" + name + "'");
}

bool CoxeterGraph::has_infinite_label() const {
  for (int a = 0; a < rank(); ++a)
    for (int b = a + 1; b < rank(); ++b)
      if (label(a, b) == infinity_label) return true;
  return false;
}

CoxeterGraph CoxeterGraph::induced(VertexSet keep) const {
  std::vector<std::string> names;
  for (int v : keep.elements()) {
    if (v >= rank()) fail(ErrorCode::InvalidArgument, "vertex index out of range");
    names.push_back(vertices_[v]);
  }
  std::vector<LabeledEdge> edges;
  auto kept = keep.elements();
  for (size_t i = 0; i < kept.size(); ++i)
    for (size_t j = i + 1; j < kept.size(); ++j)
      if (int m = label(kept[i], kept[j]); m >= 3)
        edges.push_back({vertices_[kept[i]], vertices_[kept[j]], m});
  return CoxeterGraph(std::move(names), edges);
}

CoxeterGraph CoxeterGraph::induced(const std::vector<std::string>& names) const {
  return induced(set_of(names));
}

std::vector<VertexSet> CoxeterGraph::components() const {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (int start = 0; start < rank(); ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp = VertexSet::single(start);
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < rank(); ++w)
        if (w != v && label(v, w) >= 3 && !comp.contains(w)) {
          comp.add(w);
          stack.push_back(w);
        }
    }
    seen = seen.unite(comp);
    out.push_back(comp);
  }
  return out;
}

VertexSet CoxeterGraph::set_of(const std::vector<std::string>& names) const {
  VertexSet out;
  for (const auto& n : names) out.add(require_index(n));
  return out;
}

std::vector<std::string> CoxeterGraph::names_of(VertexSet set) const {
  std::vector<std::string> out;
  for (int v : set.elements()) out.push_back(vertices_[v]);
  return out;
}

}  // namespace artin
