#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgs/words.hpp"

namespace fgs {

/// edge(from --label--> to), label a generator index.
struct LabeledEdge {
  std::size_t from;
  std::size_t label;
  std::size_t to;

  auto operator<=>(const LabeledEdge&) const = default;
};

/// Basepointed E-labelled graph under construction. No invariants beyond
/// labels < rank and endpoints < vertex_count.
struct LabeledGraph {
  std::size_t rank = 0;
  std::size_t vertex_count = 1;
  std::size_t basepoint = 0;
  std::vector<LabeledEdge> edges;
  /// Optional per-vertex annotation (coset labels such as "3·X").
  std::vector<std::string> notes;

  std::size_t add_vertex(std::string note = {});
  void add_edge(std::size_t from, std::size_t label, std::size_t to) { edges.push_back({from, label, to}); }
  /// Adds an edge reading letter l from `from` to `to` (reversed for ē).
  void add_letter_edge(std::size_t from, Letter l, std::size_t to);
};

/// Byte string identifying a core graph up to basepointed labelled isomorphism.
struct CanonicalKey {
  std::string bytes;

  auto operator<=>(const CanonicalKey&) const = default;
};

/// A folded core graph with canonical vertex numbering (basepoint 0).
/// Immutable once built.
class CoreGraph {
 public:
  /// Checks FOLDED and CORE, then renumbers canonically. Throws
  /// std::invalid_argument if either property fails.
  static CoreGraph certify(const LabeledGraph& g);

  std::size_t rank() const { return rank_; }
  std::size_t vertex_count() const { return vertex_count_; }
  static constexpr std::size_t basepoint() { return 0; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const CanonicalKey& key() const { return key_; }

  /// Endpoint of the unique edge reading l from v.
  std::optional<std::size_t> step(std::size_t v, Letter l) const;

  LabeledGraph to_labeled() const;

  bool operator==(const CoreGraph& other) const { return key_ == other.key_; }

 private:
  CoreGraph() = default;

  std::size_t rank_ = 0;
  std::size_t vertex_count_ = 1;
  std::vector<LabeledEdge> edges_;
  /// adjacency_[v * 2 * rank + letter code] = endpoint + 1, 0 if absent.
  std::vector<std::uint32_t> adjacency_;
  CanonicalKey key_;
};

LabeledGraph lollipop(const Word& w, std::size_t rank);
LabeledGraph wedge(const std::vector<LabeledGraph>& graphs);
/// Stallings folding. `shuffle_seed` permutes the order in which edge pairs
/// are examined; the result is independent of it.
LabeledGraph fold(const LabeledGraph& g, std::optional<std::uint64_t> shuffle_seed = std::nullopt);
LabeledGraph basepoint_component(const LabeledGraph& g);
/// Basepoint component, then iterated removal of non-basepoint vertices of degree ≤ 1.
LabeledGraph trim(const LabeledGraph& g);

CoreGraph core_of(const WordSet& z, const Alphabet& alphabet);

/// Vertex reached by reading w from the basepoint, or nullopt.
std::optional<std::size_t> trace(const CoreGraph& g, const Word& w);
inline bool is_member(const CoreGraph& g, const Word& w) { return trace(g, w) == CoreGraph::basepoint(); }

/// Generators labelling a loop at the basepoint, i.e. E ∩ H.
std::vector<std::size_t> basepoint_loop_letters(const CoreGraph& g);

inline const CanonicalKey& canonical_key(const CoreGraph& g) { return g.key(); }

/// Free basis of H read off a BFS spanning tree.
WordSet subgroup_basis(const CoreGraph& g);

bool is_folded(const LabeledGraph& g);

}  // namespace fgs
