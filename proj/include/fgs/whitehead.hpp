#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fgs/words.hpp"

namespace fgs {

/// Set of letters as a bitmask over Letter::code().
using LetterSet = std::uint64_t;

inline constexpr LetterSet letter_bit(Letter l) { return LetterSet{1} << l.code(); }
inline constexpr bool contains(LetterSet s, Letter l) { return (s & letter_bit(l)) != 0; }
/// All letters e, ē for the first `rank` generators.
inline constexpr LetterSet all_letters(std::size_t rank) {
  return rank >= 32 ? ~LetterSet{0} : (LetterSet{1} << (2 * rank)) - 1;
}
/// Letters of the given generators (both signs).
LetterSet letters_of(const std::vector<std::size_t>& generators);
/// { ē : e ∈ s }
LetterSet inverse_set(LetterSet s);

/// Vertex of a Whitehead graph: 0 is the basepoint 1, letter l is l.code() + 1.
using WhVertex = std::size_t;
inline constexpr WhVertex kWhBasepoint = 0;
inline constexpr WhVertex wh_vertex(Letter l) { return l.code() + 1; }
inline constexpr Letter wh_letter(WhVertex v) { return Letter::from_code(v - 1); }

/// Whitehead graph on E^{±1} ∪ {1}. Vertices are the letters of the
/// generators in `vertex_generators` plus the basepoint.
struct WhGraph {
  std::size_t rank = 0;
  std::vector<std::size_t> vertex_generators;
  std::set<std::pair<WhVertex, WhVertex>> edges;

  LetterSet vertex_letters() const { return letters_of(vertex_generators); }
  std::vector<WhVertex> vertices() const;
};

/// Wh(Z rel E) over every generator of the alphabet.
WhGraph whitehead_graph(const WordSet& z, const Alphabet& alphabet);
WhGraph whitehead_graph(const WordSet& z, std::size_t rank);
/// Wh(Z rel E_Z), the graph restricted to the support of Z.
WhGraph whitehead_graph_on_support(const WordSet& z, const Alphabet& alphabet);

bool is_connected(const WhGraph& g);
/// Least vertex whose removal disconnects the basepointed graph; if the graph
/// is already disconnected, the least letter. Letters scanned x, X, y, Y, ...
std::optional<Letter> find_cut_vertex(const WhGraph& g);

/// An element (₀D, ₁D, e★) of cuts(E).
class Cut {
 public:
  /// Throws std::invalid_argument unless d0 ∪ d1 = E^{±1}, d0 ∩ d1 = {e★}
  /// and d1 ≠ {e★}.
  Cut(std::size_t rank, LetterSet d0, LetterSet d1, Letter e_star);

  std::size_t rank() const { return rank_; }
  LetterSet d0() const { return d0_; }
  LetterSet d1() const { return d1_; }
  Letter e_star() const { return e_star_; }

  /// Characteristic map of ₁D.
  int chi(Letter l) const { return contains(d1_, l) ? 1 : 0; }
  int eta() const { return chi(e_star_.inverse()); }
  Letter d_star() const { return eta() == 1 ? e_star_ : e_star_.inverse(); }

  /// ₐD_β = ₐD ∩ (ᵦD)^{-1}
  LetterSet block(int alpha, int beta) const;
  /// The unique (α, β) with generator e ∈ ₐE_β and e^φ = d★^α e d̄★^β.
  std::pair<int, int> edge_shift(std::size_t generator) const;

  bool operator==(const Cut&) const = default;

 private:
  std::size_t rank_;
  LetterSet d0_;
  LetterSet d1_;
  Letter e_star_;
};

/// φ_C together with its formulaic inverse.
struct CutAutomorphism {
  GeneratorMap phi;
  GeneratorMap phi_inverse;
};

CutAutomorphism phi_of_cut(const Cut& c);

/// True iff every edge of g lies in K(₀D ∪ {1}) or K(₁D).
bool cut_covers(const Cut& c, const WhGraph& g);

/// Whitehead's cut-vertex subroutine. `e_star` must be a Whitehead
/// cut-vertex of Wh(Z rel E_Z); when that graph is disconnected it is ignored.
/// Throws std::logic_error on a contract violation.
Cut cut_subroutine(const WordSet& z, const Alphabet& alphabet, Letter e_star);

struct ReductionStep {
  Cut cut;
  std::size_t total_length;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  /// Φ, with Z′ = Z^{Φ̄}.
  GeneratorMap phi_total;
  GeneratorMap phi_total_inverse;
  WordSet final_set;
};

/// Whitehead's cut-vertex algorithm.
ReductionTrace cut_vertex_algorithm(const WordSet& z, const Alphabet& alphabet);

/// Basis supp(Z rel E^Φ) of Cl(Z), as words over E.
std::vector<Word> closure_basis(const WordSet& z, const Alphabet& alphabet);
std::vector<Word> closure_basis(const ReductionTrace& trace, const Alphabet& alphabet);

struct SubbasisVerdict {
  bool is_subbasis = false;
  /// When is_subbasis: a basis of the whole group containing Z, indexed by
  /// generator (entry e is either e^Φ or the word of Z it was reduced from).
  std::vector<Word> extended_basis;
  /// Inverse of the automorphism e ↦ extended_basis[e], built from the
  /// formulaic inverses of the cut automorphisms.
  GeneratorMap extended_basis_inverse;
  ReductionTrace trace;
};

SubbasisVerdict is_subbasis(const WordSet& z, const Alphabet& alphabet);

}  // namespace fgs
