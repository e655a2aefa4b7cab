#include "artin/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "artin/amalgam.hpp"
#include "artin/classification.hpp"
#include "artin/coxeter_group.hpp"
#include "artin/errors.hpp"
#include "artin/garside.hpp"
#include "artin/structure.hpp"
#include "artin/words.hpp"

namespace artin {

namespace {

using nlohmann::json;

struct CliOptions {
  std::string graph_path;
  std::string word_text;
  std::string subset_text;
  bool json_out = false;
  bool trace = false;
  std::size_t cap_elements = default_element_cap;
  std::size_t cap_words = default_word_cap;
};

CoxeterGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open graph file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return CoxeterGraph::parse(text.str());
}

AmalgamOptions solver_options(const CliOptions& o) {
  AmalgamOptions opts;
  opts.garside_limits.word_cap = o.cap_words;
  opts.garside_limits.element_cap = o.cap_elements;
  return opts;
}

std::vector<std::string> split_names(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> names;
  std::string tok;
  while (in >> tok) names.push_back(tok);
  return names;
}

std::string braced(const std::vector<std::string>& names) {
  std::string out = "{";
  for (const auto& n : names) out += " " + n;
  return out + " }";
}

void print_trace(const std::vector<std::string>& trace, std::ostream& out) {
  for (const auto& line : trace) out << "# " << line << "\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_classify(const CliOptions& o, std::ostream& out) {
  CoxeterGraph g = load_graph(o.graph_path);
  ClassificationReport rep = classify(g);
  std::string finite_type;
  if (rep.spherical) {
    for (const auto& comp : rep.components) {
      if (!finite_type.empty()) finite_type += " x ";
      finite_type += finite_type_name(g.induced(comp));
    }
  }
  if (o.json_out) {
    json j{{"kind", "classification"},
           {"connected", rep.connected},
           {"components", rep.components},
           {"spherical", rep.spherical},
           {"free_of_infinity", rep.free_of_infinity},
           {"large", rep.large},
           {"extra_large", rep.extra_large},
           {"fc_type", rep.fc_type},
           {"two_dimensional", rep.two_dimensional}};
    if (rep.spherical) j["finite_type"] = finite_type;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "connected: " << yes_no(rep.connected) << "\n";
  out << "components:";
  for (const auto& comp : rep.components) out << " " << braced(comp);
  out << "\n";
  out << "spherical: " << yes_no(rep.spherical);
  if (rep.spherical) out << " (" << finite_type << ")";
  out << "\n";
  out << "free of infinity: " << yes_no(rep.free_of_infinity) << "\n";
  out << "large: " << yes_no(rep.large) << "\n";
  out << "extra large: " << yes_no(rep.extra_large) << "\n";
  out << "FC type: " << yes_no(rep.fc_type) << "\n";
  out << "two dimensional: " << yes_no(rep.two_dimensional) << "\n";
  return 0;
}

int cmd_wp(const CliOptions& o, std::ostream& out) {
  CoxeterGraph g = load_graph(o.graph_path);
  GroupWord w = parse_group_word(g, o.word_text);
  AmalgamSolver solver(g, solver_options(o));
  std::vector<std::string> trace;
  bool trivial = solver.is_trivial(w, o.trace ? &trace : nullptr);
  if (o.json_out) {
    json j{{"kind", "word_problem"}, {"result", trivial ? "TRIVIAL" : "NONTRIVIAL"}};
    if (o.trace) j["trace"] = trace;
    out << j.dump(2) << "\n";
    return 0;
  }
  if (o.trace) print_trace(trace, out);
  out << (trivial ? "TRIVIAL" : "NONTRIVIAL") << "\n";
  return 0;
}

int cmd_member(const CliOptions& o, std::ostream& out) {
  CoxeterGraph g = load_graph(o.graph_path);
  GroupWord w = parse_group_word(g, o.word_text);
  VertexSet sub = g.set_of(split_names(o.subset_text));
  AmalgamSolver solver(g, solver_options(o));
  std::vector<std::string> trace;
  auto rewritten = solver.member_rewrite(w, sub, o.trace ? &trace : nullptr);
  if (o.json_out) {
    json j{{"kind", "membership"}, {"member", rewritten.has_value()}};
    if (rewritten) j["rewritten"] = format_group_word(g, *rewritten);
    if (o.trace) j["trace"] = trace;
    out << j.dump(2) << "\n";
    return 0;
  }
  if (o.trace) print_trace(trace, out);
  if (!rewritten)
    out << "NOT-MEMBER\n";
  else if (rewritten->empty())
    out << "(empty word)\n";
  else
    out << format_group_word(g, *rewritten) << "\n";
  return 0;
}

int cmd_center(const CliOptions& o, std::ostream& out) {
  CoxeterGraph g = load_graph(o.graph_path);
  CenterDescription c = center_description(g);
  for (const ComponentCenter& comp : c.components) {
    if (!comp.derivation) continue;
    if (!verify_center_derivation(g.induced(comp.vertices), *comp.derivation))
      fail(ErrorCode::Internal, "emitted center derivation failed verification");
  }
  if (o.json_out) {
    out << to_json(g, c).dump(2) << "\n";
    return 0;
  }
  out << c.product_statement << "\n";
  for (const ComponentCenter& comp : c.components) {
    out << "component " << braced(comp.vertices) << ": ";
    switch (comp.status) {
      case ComponentCenter::Status::InfiniteCyclic:
        out << "infinite cyclic, generator " << format_group_word(g, comp.generator) << "\n";
        break;
      case ComponentCenter::Status::Trivial:
        out << "trivial center (derivation verified)\n";
        break;
      case ComponentCenter::Status::Conditional:
        out << "trivial center under " << comp.assumption << "\n";
        break;
    }
  }
  return 0;
}

void print_torsion(const TorsionNode& n, std::ostream& out, int depth) {
  std::string pad(2 * static_cast<size_t>(depth), ' ');
  if (n.leaf) {
    out << pad << "leaf " << braced(n.vertices) << ": ";
    if (n.status == TorsionNode::Status::SphericalTorsionFree)
      out << "finite type, torsion free (" << n.reference << ")\n";
    else {
      out << "torsion free under " << n.assumption << "\n";
      if (!n.note.empty()) out << pad << "  " << n.note << "\n";
    }
    return;
  }
  out << pad << "split " << braced(n.vertices) << " on edge (" << n.edge_s << ", " << n.edge_t
      << "): " << n.reason << "\n";
  print_torsion(*n.left, out, depth + 1);
  print_torsion(*n.right, out, depth + 1);
}

int cmd_torsion(const CliOptions& o, std::ostream& out) {
  CoxeterGraph g = load_graph(o.graph_path);
  TorsionCertificate c = torsion_certificate(g);
  if (!verify_torsion_certificate(g, c))
    fail(ErrorCode::Internal, "emitted torsion certificate failed verification");
  if (o.json_out) {
    out << to_json(c).dump(2) << "\n";
    return 0;
  }
  out << "torsion certificate: " << (c.unconditional() ? "unconditional" : "conditional") << "\n";
  print_torsion(c.root, out, 1);
  if (!c.unconditional()) {
    out << "assumptions:\n";
    for (const auto& a : c.assumptions) out << "  " << a << "\n";
  }
  return 0;
}

void print_tree(const DecompositionTree& t, std::ostream& out, int depth) {
  std::string pad(2 * static_cast<size_t>(depth), ' ');
  if (t.leaf) {
    out << pad << "leaf " << braced(t.graph.vertex_names()) << ": "
        << (t.leaf_spherical ? "finite type" : "not finite type") << "\n";
    return;
  }
  out << pad << "split " << braced(t.graph.vertex_names()) << " on edge ("
      << t.graph.vertex_name(t.edge_s) << ", " << t.graph.vertex_name(t.edge_t) << ")"
      << ", Z = " << braced(t.graph.names_of(t.z)) << "\n";
  print_tree(*t.left, out, depth + 1);
  print_tree(*t.right, out, depth + 1);
}

json tree_json(const DecompositionTree& t) {
  json j;
  j["vertices"] = t.graph.vertex_names();
  if (t.leaf) {
    j["kind"] = "leaf";
    j["finite_type"] = t.leaf_spherical;
    return j;
  }
  j["kind"] = "amalgam";
  j["edge"] = {t.graph.vertex_name(t.edge_s), t.graph.vertex_name(t.edge_t)};
  j["x"] = t.graph.names_of(t.x);
  j["y"] = t.graph.names_of(t.y);
  j["z"] = t.graph.names_of(t.z);
  j["left"] = tree_json(*t.left);
  j["right"] = tree_json(*t.right);
  return j;
}

int cmd_decompose(const CliOptions& o, std::ostream& out) {
  CoxeterGraph g = load_graph(o.graph_path);
  DecompositionTree t = decomposition_tree(g);
  // Finite-type leaves make the factors tractable; the sharper check also
  // rules out membership queries the reduction cannot carry out.
  bool wp = AmalgamSolver(g, solver_options(o)).word_problem_supported();
  if (o.json_out) {
    json j{{"kind", "decomposition"},
           {"supported", t.supported()},
           {"word_problem_supported", wp},
           {"tree", tree_json(t)}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "decomposition (supported: " << yes_no(t.supported())
      << ", word problem supported: " << yes_no(wp) << ")\n";
  print_tree(t, out, 1);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toolkit for Artin-Tits groups presented by Coxeter graphs"};
  app.require_subcommand(1);

  CliOptions o;
  enum class Cmd { Classify, Wp, Member, Center, Torsion, Decompose };
  Cmd cmd = Cmd::Classify;

  auto add_common = [&](CLI::App* sub, bool needs_word, bool needs_subset) {
    sub->add_option("--graph", o.graph_path, "Coxeter graph file")->required();
    if (needs_word)
      sub->add_option("--word", o.word_text, "word tokens, e.g. \"s t s^-1\"")->required();
    if (needs_subset)
      sub->add_option("--subset", o.subset_text, "vertex names of the standard parabolic")
          ->required();
    sub->add_flag("--json", o.json_out, "emit JSON");
    sub->add_flag("--trace", o.trace, "log reduction steps");
    sub->add_option("--cap-elements", o.cap_elements, "group enumeration cap");
    sub->add_option("--cap-words", o.cap_words, "word rewriting work cap");
  };

  add_common(app.add_subcommand("classify", "classification report")
                 ->callback([&] { cmd = Cmd::Classify; }),
             false, false);
  add_common(app.add_subcommand("wp", "word problem: TRIVIAL or NONTRIVIAL")
                 ->callback([&] { cmd = Cmd::Wp; }),
             true, false);
  add_common(app.add_subcommand("member", "standard-parabolic membership with rewriting")
                 ->callback([&] { cmd = Cmd::Member; }),
             true, true);
  add_common(app.add_subcommand("center", "center description with derivations")
                 ->callback([&] { cmd = Cmd::Center; }),
             false, false);
  add_common(app.add_subcommand("torsion", "torsion-freeness certificate")
                 ->callback([&] { cmd = Cmd::Torsion; }),
             false, false);
  add_common(app.add_subcommand("decompose", "amalgamated-product decomposition tree")
                 ->callback([&] { cmd = Cmd::Decompose; }),
             false, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    switch (cmd) {
      case Cmd::Classify:
        return cmd_classify(o, out);
      case Cmd::Wp:
        return cmd_wp(o, out);
      case Cmd::Member:
        return cmd_member(o, out);
      case Cmd::Center:
        return cmd_center(o, out);
      case Cmd::Torsion:
        return cmd_torsion(o, out);
      case Cmd::Decompose:
        return cmd_decompose(o, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::UnsupportedBaseCase:
        return 3;
      case ErrorCode::ResourceLimit:
        return 4;
      case ErrorCode::Internal:
        return 1;
      default:
        return 2;
    }
  }
  return 2;
}

}  // namespace artin
