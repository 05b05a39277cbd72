#include "fgs/boundary.hpp"

#include <stdexcept>

namespace fgs {

BoundaryStep boundary_steps(const CoreGraph& g, const Cut& c) {
  if (g.rank() != c.rank()) throw std::invalid_argument("cut and core graph use different alphabets");
  const Letter back = c.d_star().inverse();  // d̄★

  LabeledGraph augmented = g.to_labeled();
  augmented.notes.resize(augmented.vertex_count);
  for (std::size_t v = 0; v < augmented.vertex_count; ++v) augmented.notes[v] = std::to_string(v);

  // v·d̄★ for every original vertex, resolved before any edge moves.
  std::vector<std::size_t> shifted(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto neighbour = g.step(v, back);
    shifted[v] = neighbour ? *neighbour : augmented.add_vertex(std::to_string(v) + "·d̄★");
  }

  LabeledGraph relabeled = augmented;
  for (auto& e : relabeled.edges) {
    const auto [alpha, beta] = c.edge_shift(e.label);
    e.from = alpha == 1 ? shifted[e.from] : e.from;
    e.to = beta == 1 ? shifted[e.to] : e.to;
  }

  BoundaryStep step{g, c, augmented, relabeled, {}, 0, g};
  const LabeledGraph component = basepoint_component(relabeled);
  step.restricted = fold(component);
  step.fold_merges = component.edges.size() - step.restricted.edges.size();
  step.output = CoreGraph::certify(trim(step.restricted));
  return step;
}

CoreGraph boundary(const CoreGraph& g, const Cut& c) { return boundary_steps(g, c).output; }

bool check_image_membership(const CoreGraph& g, const Cut& c, const Word& z) {
  if (!cut_covers(c, whitehead_graph(WordSet({z}), g.rank()))) return true;
  const Word image = apply_map(phi_of_cut(c).phi_inverse, z);
  return is_member(boundary(g, c), image);
}

}  // namespace fgs
