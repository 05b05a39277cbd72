#include "fgs/io.hpp"

#include <sstream>

namespace fgs::io {

json words_json(const std::vector<Word>& words, const Alphabet& alphabet) {
  json out = json::array();
  for (const auto& w : words) out.push_back(format_word(w, alphabet));
  return out;
}

json word_set_json(const WordSet& z, const Alphabet& alphabet) {
  return {{"generators", alphabet.names()}, {"words", words_json(z.words(), alphabet)}};
}

WordSet word_set_from_json(const json& j, Alphabet& alphabet_out) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("words")) {
    throw InputError("word set JSON needs \"generators\" and \"words\"");
  }
  try {
    alphabet_out = Alphabet(j.at("generators").get<std::string>());
    return parse_word_set(j.at("words").get<std::vector<std::string>>(), alphabet_out);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed word set JSON: ") + e.what());
  }
}

json map_json(const GeneratorMap& m, const Alphabet& alphabet) {
  json out = json::object();
  for (std::size_t g = 0; g < m.rank(); ++g) out[std::string(1, alphabet.name(g))] = format_word(m.image(g), alphabet);
  return out;
}

std::string letter_set_text(LetterSet s, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t code = 0; code < 2 * alphabet.rank(); ++code) {
    const Letter l = Letter::from_code(code);
    if (contains(s, l)) out += alphabet.format(l);
  }
  return out;
}

json cut_json(const Cut& c, const Alphabet& alphabet) {
  return {{"d0", letter_set_text(c.d0(), alphabet)},
          {"d1", letter_set_text(c.d1(), alphabet)},
          {"e_star", alphabet.format(c.e_star())},
          {"eta", c.eta()},
          {"d_star", alphabet.format(c.d_star())},
          {"phi", map_json(phi_of_cut(c).phi, alphabet)}};
}

std::string wh_vertex_name(WhVertex v, const Alphabet& alphabet) {
  return v == kWhBasepoint ? "1" : alphabet.format(wh_letter(v));
}

json wh_graph_json(const WhGraph& g, const Alphabet& alphabet) {
  json vertices = json::array();
  for (WhVertex v : g.vertices()) vertices.push_back(wh_vertex_name(v, alphabet));
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({wh_vertex_name(u, alphabet), wh_vertex_name(v, alphabet)});
  return {{"vertices", vertices}, {"edges", edges}};
}

std::string wh_graph_dot(const WhGraph& g, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "graph Wh {\n";
  for (WhVertex v : g.vertices()) {
    out << "  \"" << wh_vertex_name(v, alphabet) << "\"";
    if (v == kWhBasepoint) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges) {
    out << "  \"" << wh_vertex_name(u, alphabet) << "\" -- \"" << wh_vertex_name(v, alphabet) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

json edges_json(const std::vector<LabeledEdge>& edges, const Alphabet& alphabet) {
  json out = json::array();
  for (const auto& e : edges) {
    out.push_back({{"from", e.from}, {"label", std::string(1, alphabet.name(e.label))}, {"to", e.to}});
  }
  return out;
}

}  // namespace

json core_json(const CoreGraph& g, const Alphabet& alphabet) {
  return {{"basepoint", CoreGraph::basepoint()},
          {"vertices", g.vertex_count()},
          {"edges", edges_json(g.edges(), alphabet)},
          {"key", g.key().bytes}};
}

json labeled_json(const LabeledGraph& g, const Alphabet& alphabet) {
  json out{{"basepoint", g.basepoint}, {"vertices", g.vertex_count}, {"edges", edges_json(g.edges, alphabet)}};
  if (!g.notes.empty()) out["notes"] = g.notes;
  return out;
}

CoreGraph core_from_json(const json& j, const Alphabet& alphabet) {
  LabeledGraph g;
  g.rank = alphabet.rank();
  try {
    g.vertex_count = j.at("vertices").get<std::size_t>();
    g.basepoint = j.at("basepoint").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
      const auto label = e.at("label").get<std::string>();
      if (label.size() != 1) throw InputError("edge labels are single generator names");
      const std::size_t from = e.at("from").get<std::size_t>();
      const std::size_t to = e.at("to").get<std::size_t>();
      if (from >= g.vertex_count || to >= g.vertex_count) throw InputError("edge endpoint out of range");
      g.add_edge(from, alphabet.index_of(label[0]), to);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed core graph JSON: ") + e.what());
  }
  if (g.basepoint >= g.vertex_count) throw InputError("basepoint out of range");
  return CoreGraph::certify(g);
}

std::string labeled_dot(const LabeledGraph& g, const Alphabet& alphabet, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    out << "  " << v << " [label=\"" << (v < g.notes.size() && !g.notes[v].empty() ? g.notes[v] : std::to_string(v))
        << "\"";
    if (v == g.basepoint) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& e : g.edges) {
    out << "  " << e.from << " -> " << e.to << " [label=\"" << alphabet.name(e.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string core_dot(const CoreGraph& g, const Alphabet& alphabet, const std::string& name) {
  return labeled_dot(g.to_labeled(), alphabet, name);
}

json trace_json(const ReductionTrace& t, const WordSet& input, const Alphabet& alphabet) {
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back({{"cut", cut_json(s.cut, alphabet)}, {"total_length", s.total_length}});
  return {{"input", words_json(input.words(), alphabet)},
          {"input_length", total_length(input)},
          {"dropped_identities", input.dropped_identities()},
          {"steps", steps},
          {"phi", map_json(t.phi_total, alphabet)},
          {"phi_inverse", map_json(t.phi_total_inverse, alphabet)},
          {"final", words_json(t.final_set.words(), alphabet)},
          {"final_length", total_length(t.final_set)}};
}

json subbasis_json(const SubbasisVerdict& v, const WordSet& input, const Alphabet& alphabet) {
  json out{{"is_subbasis", v.is_subbasis},
           {"input", words_json(input.words(), alphabet)},
           {"final", words_json(v.trace.final_set.words(), alphabet)},
           {"steps", v.trace.steps.size()}};
  if (v.is_subbasis) {
    out["extended_basis"] = words_json(v.extended_basis, alphabet);
    out["extended_basis_inverse"] = map_json(v.extended_basis_inverse, alphabet);
  }
  return out;
}

json boundary_json(const BoundaryStep& step, std::size_t cut_index, const Alphabet& alphabet) {
  return {{"cut_index", cut_index},
          {"cut", cut_json(step.cut, alphabet)},
          {"input", core_json(step.input, alphabet)},
          {"output", core_json(step.output, alphabet)},
          {"input_edges", step.input.edge_count()},
          {"output_edges", step.output.edge_count()},
          {"fold_merges", step.fold_merges},
          {"output_basis", words_json(subgroup_basis(step.output).words(), alphabet)}};
}

std::string boundary_explain_dot(const BoundaryStep& step, const Alphabet& alphabet) {
  return labeled_dot(step.augmented, alphabet, "augmented") + labeled_dot(step.relabeled, alphabet, "relabeled") +
         labeled_dot(step.restricted, alphabet, "restricted") + core_dot(step.output, alphabet, "output");
}

std::string exploration_json_lines(const ExplorationGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    json line{{"node", i}, {"key", n.core.key().bytes}, {"edges", n.core.edge_count()}, {"loopCount", n.loop_count}};
    if (n.parent) {
      line["parent"] = n.parent->first;
      line["cut"] = n.parent->second;
    } else {
      line["parent"] = nullptr;
    }
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string exploration_dot(const ExplorationGraph& g, const Alphabet& alphabet) {
  const std::size_t best = best_node(g);
  std::ostringstream out;
  out << "digraph exploration {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    out << "  n" << i << " [label=\"" << i << "\\nedges " << n.core.edge_count() << "\\nloops " << n.loop_count << "\"";
    if (i == g.root) out << ", shape=doublecircle";
    if (i == best) out << ", style=filled, fillcolor=gold";
    out << "];\n";
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    if (!n.parent) continue;
    const Cut& c = g.cuts[n.parent->second];
    out << "  n" << n.parent->first << " -> n" << i << " [label=\"" << n.parent->second << ": "
        << letter_set_text(c.d1(), alphabet) << "/" << alphabet.format(c.e_star()) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

json sandwich_json(const SandwichResult& r, const Alphabet& alphabet) {
  json path = json::array();
  for (const auto& c : r.path) path.push_back(cut_json(c, alphabet));
  return {{"upper_basis", words_json(r.upper_basis, alphabet)},
          {"upper_rank", r.upper_basis.size()},
          {"full_basis", words_json(r.full_basis, alphabet)},
          {"lower_layer", words_json(r.lower_layer, alphabet)},
          {"lower_rank", r.lower_layer.size()},
          {"best_count", r.best_count},
          {"best_node", r.best_node},
          {"node_count", r.node_count},
          {"path", path},
          {"phi", map_json(r.phi_composition, alphabet)},
          {"phi_inverse", map_json(r.phi_composition_inverse, alphabet)}};
}

}  // namespace fgs::io
