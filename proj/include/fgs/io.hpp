#pragma once

// JSON and DOT renderings of the library's data types.

#include <string>
#include <vector>

#include <json.hpp>

#include "fgs/boundary.hpp"
#include "fgs/core_graph.hpp"
#include "fgs/explorer.hpp"
#include "fgs/whitehead.hpp"
#include "fgs/words.hpp"

namespace fgs::io {

using nlohmann::json;

json words_json(const std::vector<Word>& words, const Alphabet& alphabet);
/// {"generators":"xy","words":[...]}
json word_set_json(const WordSet& z, const Alphabet& alphabet);
WordSet word_set_from_json(const json& j, Alphabet& alphabet_out);

json map_json(const GeneratorMap& m, const Alphabet& alphabet);
std::string letter_set_text(LetterSet s, const Alphabet& alphabet);
json cut_json(const Cut& c, const Alphabet& alphabet);

/// "1" for the basepoint, otherwise the letter (uppercase for inverses).
std::string wh_vertex_name(WhVertex v, const Alphabet& alphabet);
json wh_graph_json(const WhGraph& g, const Alphabet& alphabet);
std::string wh_graph_dot(const WhGraph& g, const Alphabet& alphabet);

/// {"basepoint":0,"vertices":N,"edges":[{"from":i,"label":"x","to":j}]}
json core_json(const CoreGraph& g, const Alphabet& alphabet);
json labeled_json(const LabeledGraph& g, const Alphabet& alphabet);
/// Inverse of core_json. Throws InputError on malformed documents and
/// std::invalid_argument if the graph is not a folded core.
CoreGraph core_from_json(const json& j, const Alphabet& alphabet);
std::string labeled_dot(const LabeledGraph& g, const Alphabet& alphabet, const std::string& name);
std::string core_dot(const CoreGraph& g, const Alphabet& alphabet, const std::string& name = "core");

json trace_json(const ReductionTrace& t, const WordSet& input, const Alphabet& alphabet);
json subbasis_json(const SubbasisVerdict& v, const WordSet& input, const Alphabet& alphabet);
json boundary_json(const BoundaryStep& step, std::size_t cut_index, const Alphabet& alphabet);
/// The four phase graphs of one boundary operation as consecutive digraphs.
std::string boundary_explain_dot(const BoundaryStep& step, const Alphabet& alphabet);

/// One JSON object per line: {"key","edges","loopCount","parent"}.
std::string exploration_json_lines(const ExplorationGraph& g);
std::string exploration_dot(const ExplorationGraph& g, const Alphabet& alphabet);
json sandwich_json(const SandwichResult& r, const Alphabet& alphabet);

}  // namespace fgs::io
