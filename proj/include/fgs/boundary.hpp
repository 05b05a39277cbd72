#pragma once

#include "fgs/core_graph.hpp"
#include "fgs/whitehead.hpp"

namespace fgs {

/// Intermediate graphs of one boundary operation, kept for --explain dumps.
struct BoundaryStep {
  CoreGraph input;
  Cut cut;
  /// Input plus a fresh degree-0 vertex v·d̄★ for each v lacking one.
  LabeledGraph augmented;
  /// Edges moved to (v·d̄★^α, w·d̄★^β); labels e stand for e^φ.
  LabeledGraph relabeled;
  /// Basepoint component of the relabeled graph, folded.
  LabeledGraph restricted;
  /// Number of edge identifications the folding pass performed.
  std::size_t fold_merges = 0;
  CoreGraph output;
};

/// The core of ∂_C H computed from the core of H. Throws
/// std::invalid_argument if the cut and graph disagree on the rank.
CoreGraph boundary(const CoreGraph& g, const Cut& c);
BoundaryStep boundary_steps(const CoreGraph& g, const Cut& c);

/// For z ∈ H: if C cuts Wh({z} rel E), checks that z^{φ̄_C} lies in ∂_C H.
/// Returns true when the hypothesis fails (vacuous) or the membership holds.
bool check_image_membership(const CoreGraph& g, const Cut& c, const Word& z);

}  // namespace fgs
