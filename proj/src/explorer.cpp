#include "fgs/explorer.hpp"

#include <algorithm>
#include <unordered_map>

#include "fgs/boundary.hpp"

namespace fgs {

std::vector<Cut> enumerate_cuts(std::size_t rank) {
  std::vector<Cut> cuts;
  if (rank == 0) return cuts;
  const LetterSet all = all_letters(rank);
  const std::size_t letters = 2 * rank;
  for (std::size_t code = 0; code < letters; ++code) {
    const Letter star = Letter::from_code(code);
    const LetterSet star_bit = letter_bit(star);
    const LetterSet others = all & ~star_bit;
    // Enumerate subsets S of the other letters in increasing bitmask order of
    // ₁D = S ∪ {e★}; S = ∅ is excluded.
    std::vector<LetterSet> d1s;
    for (LetterSet s = others; s != 0; s = (s - 1) & others) d1s.push_back(s | star_bit);
    std::sort(d1s.begin(), d1s.end());
    for (LetterSet d1 : d1s) cuts.emplace_back(rank, (all & ~d1) | star_bit, d1, star);
  }
  return cuts;
}

ExplorationGraph explore(const WordSet& z, const Alphabet& alphabet, const ExploreLimits& limits) {
  if (alphabet.rank() > kMaxUnforcedRank && !limits.force_rank) {
    throw InputError("rank " + std::to_string(alphabet.rank()) + " exceeds " + std::to_string(kMaxUnforcedRank) +
                     "; pass --force-rank to explore anyway");
  }
  if (limits.node_budget == 0) throw InputError("node budget must be at least 1");
  ExplorationGraph g;
  g.cuts = enumerate_cuts(alphabet.rank());
  CoreGraph root = core_of(z, alphabet);
  std::unordered_map<std::string, std::size_t> index;
  index.emplace(root.key().bytes, 0);
  g.nodes.push_back({root, std::nullopt, basepoint_loop_letters(root).size()});

  for (std::size_t head = 0; head < g.nodes.size(); ++head) {
    for (std::size_t ci = 0; ci < g.cuts.size(); ++ci) {
      CoreGraph image = boundary(g.nodes[head].core, g.cuts[ci]);
      ++g.boundary_evaluations;
      if (index.contains(image.key().bytes)) continue;
      if (g.nodes.size() >= limits.node_budget) throw BudgetExceeded(limits.node_budget);
      index.emplace(image.key().bytes, g.nodes.size());
      const std::size_t loops = basepoint_loop_letters(image).size();
      g.nodes.push_back({std::move(image), std::make_pair(head, ci), loops});
    }
  }
  return g;
}

std::size_t best_node(const ExplorationGraph& g) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < g.nodes.size(); ++i) {
    if (g.nodes[i].loop_count > g.nodes[best].loop_count) best = i;
  }
  return best;
}

std::vector<std::size_t> path_to(const ExplorationGraph& g, std::size_t node) {
  std::vector<std::size_t> cuts;
  while (g.nodes.at(node).parent) {
    cuts.push_back(g.nodes[node].parent->second);
    node = g.nodes[node].parent->first;
  }
  std::reverse(cuts.begin(), cuts.end());
  return cuts;
}

SandwichResult sandwich(const WordSet& z, const Alphabet& alphabet, const ExplorationGraph& explored) {
  SandwichResult result;
  result.upper_basis = closure_basis(z, alphabet);
  result.node_count = explored.nodes.size();
  result.best_node = best_node(explored);
  result.best_count = explored.nodes[result.best_node].loop_count;

  const auto path = path_to(explored, result.best_node);
  GeneratorMap forward = GeneratorMap::identity(alphabet.rank());
  GeneratorMap backward = forward;
  // E″ = E^{φ_Cn ⋯ φ_C1}: φ_Cn acts first under the right action.
  for (auto it = path.rbegin(); it != path.rend(); ++it) forward = compose(forward, phi_of_cut(explored.cuts[*it]).phi);
  for (std::size_t ci : path) backward = compose(backward, phi_of_cut(explored.cuts[ci]).phi_inverse);
  for (std::size_t ci : path) result.path.push_back(explored.cuts[ci]);
  result.phi_composition = forward;
  result.phi_composition_inverse = backward;
  result.full_basis = forward.images();

  const CoreGraph g = explored.nodes[explored.root].core;
  for (const auto& w : result.full_basis) {
    if (is_member(g, w)) result.lower_layer.push_back(w);
  }
  if (result.lower_layer.size() < result.best_count) {
    throw std::logic_error("lower layer smaller than the loop count of the chosen node");
  }
  return result;
}

SandwichResult sandwich(const WordSet& z, const Alphabet& alphabet, const ExploreLimits& limits) {
  return sandwich(z, alphabet, explore(z, alphabet, limits));
}

}  // namespace fgs
