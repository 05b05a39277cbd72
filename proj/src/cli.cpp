#include "fgs/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fgs/io.hpp"
#include "fgs/oracles.hpp"

namespace fgs::cli {

namespace {

using io::json;

std::string trim_copy(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read word file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim_copy(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::size_t resolve_budget(const RunConfig& config) {
  if (config.node_budget) return *config.node_budget;
  if (const char* env = std::getenv("FGS_NODE_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) throw InputError("FGS_NODE_BUDGET must be a positive integer");
    return static_cast<std::size_t>(value);
  }
  return kDefaultNodeBudget;
}

void require_oracle_rank(const Alphabet& a) {
  if (a.rank() > oracles::kSearchMaxRank) throw InputError("--oracle is limited to rank 3");
}

std::string words_text(const std::vector<Word>& words, const Alphabet& a) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += words[i].empty() ? "1" : format_word(words[i], a);
  }
  return "{" + out + "}";
}

std::string map_text(const GeneratorMap& m, const Alphabet& a) {
  std::string out;
  for (std::size_t g = 0; g < m.rank(); ++g) {
    if (g) out += ", ";
    out += std::string(1, a.name(g)) + " -> " + format_word(m.image(g), a);
  }
  return out;
}

std::string cut_text(const Cut& c, const Alphabet& a) {
  return "D0=" + io::letter_set_text(c.d0(), a) + " D1=" + io::letter_set_text(c.d1(), a) +
         " e*=" + a.format(c.e_star()) + " phi: " + map_text(phi_of_cut(c).phi, a);
}

struct Output {
  json doc;
  std::string dot;
  std::string text;
  /// Preformatted JSON (JSON lines); overrides doc when set.
  std::string raw_json;
  int exit_code = kOk;
};

std::string render(const Output& o, const std::string& format) {
  if (format == "json") return o.raw_json.empty() ? o.doc.dump(2) + "\n" : o.raw_json;
  if (format == "dot") {
    if (o.dot.empty()) throw InputError("this command has no DOT output");
    return o.dot;
  }
  return o.text;
}

Output cmd_graph(const WordSet& z, const Alphabet& a) {
  const WhGraph g = whitehead_graph(z, a);
  Output o{io::wh_graph_json(g, a), io::wh_graph_dot(g, a), {}, {}, kOk};
  for (const auto& [u, v] : g.edges) o.text += io::wh_vertex_name(u, a) + " -- " + io::wh_vertex_name(v, a) + "\n";
  const auto cv = find_cut_vertex(g);
  o.doc["cut_vertex"] = cv ? json(a.format(*cv)) : json(nullptr);
  o.text += "cut vertex: " + (cv ? a.format(*cv) : std::string("none")) + "\n";
  return o;
}

Output cmd_reduce(const WordSet& z, const Alphabet& a, bool oracle) {
  const ReductionTrace t = cut_vertex_algorithm(z, a);
  Output o;
  o.doc = io::trace_json(t, z, a);
  o.text = "input " + words_text(z.words(), a) + " length " + std::to_string(total_length(z)) + "\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    o.text += "step " + std::to_string(i + 1) + ": " + cut_text(t.steps[i].cut, a) + " length " +
              std::to_string(t.steps[i].total_length) + "\n";
  }
  o.text += "final " + words_text(t.final_set.words(), a) + " length " + std::to_string(total_length(t.final_set)) + "\n";
  if (oracle) {
    require_oracle_rank(a);
    const std::size_t depth = a.rank() <= 2 ? 4 : 2;
    const std::size_t best = oracles::whitehead_search(z, a.rank(), depth);
    o.doc["oracle"] = {{"search_depth", depth}, {"search_min_length", best}};
    o.text += "oracle: depth " + std::to_string(depth) + " search minimum " + std::to_string(best) + "\n";
  }
  return o;
}

Output cmd_closure(const WordSet& z, const Alphabet& a, bool oracle) {
  const auto basis = closure_basis(z, a);
  Output o;
  o.doc = {{"basis", io::words_json(basis, a)}, {"rank", basis.size()}};
  o.text = "closure basis " + words_text(basis, a) + " rank " + std::to_string(basis.size()) + "\n";
  if (oracle) {
    require_oracle_rank(a);
    const std::size_t best = oracles::min_support_size(z, a.rank(), 2);
    o.doc["oracle"] = {{"search_depth", 2}, {"min_support_size", best}};
    o.text += "oracle: depth 2 minimum support " + std::to_string(best) + "\n";
  }
  return o;
}

Output cmd_subbasis(const WordSet& z, const Alphabet& a, bool oracle) {
  const SubbasisVerdict v = is_subbasis(z, a);
  Output o;
  o.doc = io::subbasis_json(v, z, a);
  o.text = std::string("sub-basis: ") + (v.is_subbasis ? "yes" : "no") + "\n";
  if (v.is_subbasis) o.text += "extended basis " + words_text(v.extended_basis, a) + "\n";
  o.exit_code = v.is_subbasis ? kOk : kVerdictFalse;
  if (oracle) {
    require_oracle_rank(a);
    if (z.size() != 1) throw InputError("--oracle for subbasis takes a single word");
    const Word& w = *z.begin();
    const bool primitive = oracles::primitivity_oracle(w, a.rank(), w.length());
    o.doc["oracle"] = {{"primitive", primitive}};
    o.text += std::string("oracle: primitive ") + (primitive ? "yes" : "no") + "\n";
  }
  return o;
}

Output cmd_core(const WordSet& z, const Alphabet& a, bool oracle) {
  const CoreGraph g = core_of(z, a);
  Output o;
  o.doc = io::core_json(g, a);
  o.doc["basis"] = io::words_json(subgroup_basis(g).words(), a);
  o.dot = io::core_dot(g, a);
  o.text = "vertices " + std::to_string(g.vertex_count()) + " edges " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    o.text += std::to_string(e.from) + " -" + a.name(e.label) + "-> " + std::to_string(e.to) + "\n";
  }
  o.text += "basis " + words_text(subgroup_basis(g).words(), a) + "\n";
  if (oracle) {
    const auto n = oracles::nielsen_reduce(z);
    o.doc["oracle"] = {{"nielsen_basis", io::words_json(n.words, a)}};
    o.text += "oracle: Nielsen basis " + words_text(n.words, a) + "\n";
  }
  return o;
}

Output cmd_boundary(const WordSet& z, const Alphabet& a, const RunConfig& config) {
  if (!config.cut_index) throw InputError("boundary needs --cut <index>; list indices with the cuts command");
  const auto cuts = enumerate_cuts(a.rank());
  if (*config.cut_index >= cuts.size()) {
    throw InputError("cut index out of range (" + std::to_string(cuts.size()) + " cuts)");
  }
  const BoundaryStep step = boundary_steps(core_of(z, a), cuts[*config.cut_index]);
  Output o;
  o.doc = io::boundary_json(step, *config.cut_index, a);
  if (config.explain) {
    o.doc["phases"] = {{"augmented", io::labeled_json(step.augmented, a)},
                       {"relabeled", io::labeled_json(step.relabeled, a)},
                       {"restricted", io::labeled_json(step.restricted, a)}};
  }
  o.dot = config.explain ? io::boundary_explain_dot(step, a) : io::core_dot(step.output, a, "boundary");
  o.text = "cut " + cut_text(step.cut, a) + "\n";
  o.text += "edges " + std::to_string(step.input.edge_count()) + " -> " + std::to_string(step.output.edge_count()) + "\n";
  o.text += "basis " + words_text(subgroup_basis(step.output).words(), a) + "\n";
  return o;
}

ExploreLimits limits_of(const RunConfig& config) {
  ExploreLimits limits;
  limits.node_budget = resolve_budget(config);
  limits.force_rank = config.force_rank;
  return limits;
}

Output cmd_explore(const WordSet& z, const Alphabet& a, const RunConfig& config) {
  const ExplorationGraph g = explore(z, a, limits_of(config));
  Output o;
  o.raw_json = io::exploration_json_lines(g);
  o.dot = io::exploration_dot(g, a);
  const std::size_t best = best_node(g);
  o.text = "nodes " + std::to_string(g.nodes.size()) + " boundary evaluations " +
           std::to_string(g.boundary_evaluations) + "\nbest node " + std::to_string(best) + " loops " +
           std::to_string(g.nodes[best].loop_count) + "\n";
  return o;
}

Output cmd_sandwich(const WordSet& z, const Alphabet& a, const RunConfig& config) {
  const ExplorationGraph g = explore(z, a, limits_of(config));
  const SandwichResult r = sandwich(z, a, g);
  Output o;
  o.doc = io::sandwich_json(r, a);
  o.dot = io::exploration_dot(g, a);
  o.text = "upper layer " + words_text(r.upper_basis, a) + " rank " + std::to_string(r.upper_basis.size()) + "\n";
  o.text += "basis E'' " + words_text(r.full_basis, a) + "\n";
  o.text += "lower layer " + words_text(r.lower_layer, a) + " best count " + std::to_string(r.best_count) + "\n";
  o.text += "nodes " + std::to_string(r.node_count) + "\n";
  if (config.oracle) {
    require_oracle_rank(a);
    const std::size_t best = oracles::max_basis_intersection(z, a.rank(), 2);
    o.doc["oracle"] = {{"search_depth", 2}, {"max_basis_intersection", best}};
    o.text += "oracle: depth 2 maximum basis intersection " + std::to_string(best) + "\n";
  }
  return o;
}

Output cmd_cuts(const Alphabet& a) {
  const auto cuts = enumerate_cuts(a.rank());
  Output o;
  o.doc = json::array();
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    json c = io::cut_json(cuts[i], a);
    c["index"] = i;
    o.doc.push_back(c);
    o.text += std::to_string(i) + ": " + cut_text(cuts[i], a) + "\n";
  }
  return o;
}

}  // namespace

std::vector<std::string> expand_words(const std::vector<std::string>& words) {
  std::vector<std::string> out;
  for (const auto& entry : words) {
    if (!entry.empty() && entry.front() == '@') {
      const auto file = read_word_file(entry.substr(1));
      out.insert(out.end(), file.begin(), file.end());
      continue;
    }
    std::stringstream in(entry);
    std::string item;
    bool any = false;
    while (std::getline(in, item, ',')) {
      out.push_back(trim_copy(item));
      any = true;
    }
    if (!any) out.emplace_back();
  }
  return out;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    const auto& names = commands();
    if (std::find(names.begin(), names.end(), config.command) == names.end()) {
      throw InputError("unknown command '" + config.command + "'");
    }
    if (config.output != "json" && config.output != "dot" && config.output != "text") {
      throw InputError("--output must be json, dot or text");
    }
    if (config.generators.empty()) throw InputError("--gens is required");
    if (config.node_budget && *config.node_budget == 0) throw InputError("--budget must be at least 1");
    const Alphabet a(config.generators);
    const WordSet z = parse_word_set(expand_words(config.words), a);
    if (z.dropped_identities() > 0) {
      result.err += "warning: dropped " + std::to_string(z.dropped_identities()) + " identity word(s)\n";
    }

    Output o;
    const std::string& c = config.command;
    if (c == "graph") o = cmd_graph(z, a);
    else if (c == "reduce") o = cmd_reduce(z, a, config.oracle);
    else if (c == "closure") o = cmd_closure(z, a, config.oracle);
    else if (c == "subbasis") o = cmd_subbasis(z, a, config.oracle);
    else if (c == "core") o = cmd_core(z, a, config.oracle);
    else if (c == "boundary") o = cmd_boundary(z, a, config);
    else if (c == "explore") o = cmd_explore(z, a, config);
    else if (c == "sandwich") o = cmd_sandwich(z, a, config);
    else o = cmd_cuts(a);
    result.out = render(o, config.output);
    result.exit_code = o.exit_code;
  } catch (const InputError& e) {
    result.exit_code = kInputError;
    result.err += std::string("error: ") + e.what() + "\n";
  } catch (const BudgetExceeded& e) {
    result.exit_code = kBudgetExceeded;
    result.err += std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace fgs::cli
