#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fgs/core_graph.hpp"
#include "fgs/whitehead.hpp"

namespace fgs {

/// Raised when exploration would exceed its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : std::runtime_error("exploration exceeded the node budget of " + std::to_string(budget) + " nodes"),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

inline constexpr std::size_t kDefaultNodeBudget = 100000;
inline constexpr std::size_t kMaxUnforcedRank = 5;

struct ExploreLimits {
  std::size_t node_budget = kDefaultNodeBudget;
  /// Allow rank > kMaxUnforcedRank.
  bool force_rank = false;
};

/// All of cuts(E): e★ in letter order, then ₁D by increasing bitmask.
std::vector<Cut> enumerate_cuts(std::size_t rank);

struct ExplorationNode {
  CoreGraph core;
  /// (parent node, cut index) on the BFS tree; empty for the root.
  std::optional<std::pair<std::size_t, std::size_t>> parent;
  std::size_t loop_count = 0;
};

/// BFS tree of the graph of subgroups reachable from ⟨Z⟩ under boundary
/// operations, deduplicated by canonical key. Non-tree edges are not kept.
struct ExplorationGraph {
  std::vector<Cut> cuts;
  std::vector<ExplorationNode> nodes;
  std::size_t root = 0;
  /// Distinct (node, cut) evaluations performed.
  std::size_t boundary_evaluations = 0;
};

/// Throws InputError for rank > kMaxUnforcedRank without force_rank and
/// BudgetExceeded when more than node_budget nodes would be created.
ExplorationGraph explore(const WordSet& z, const Alphabet& alphabet, const ExploreLimits& limits = {});

/// Node with the most basepoint loops; earliest discovered on ties.
std::size_t best_node(const ExplorationGraph& g);

/// Cut indices (C₁, …, Cₙ) from the root to `node`.
std::vector<std::size_t> path_to(const ExplorationGraph& g, std::size_t node);

struct SandwichResult {
  std::vector<Word> upper_basis;
  /// E″ = E^{φ_Cn ⋯ φ_C1}, indexed by generator.
  std::vector<Word> full_basis;
  std::vector<Word> lower_layer;
  /// |E ∩ H| at the chosen node.
  std::size_t best_count = 0;
  std::vector<Cut> path;
  GeneratorMap phi_composition;
  GeneratorMap phi_composition_inverse;
  std::size_t node_count = 0;
  std::size_t best_node = 0;
};

SandwichResult sandwich(const WordSet& z, const Alphabet& alphabet, const ExploreLimits& limits = {});
SandwichResult sandwich(const WordSet& z, const Alphabet& alphabet, const ExplorationGraph& explored);

}  // namespace fgs
