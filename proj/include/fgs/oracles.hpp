#pragma once

// Brute-force reference implementations. They work on words only and share
// no code with the Whitehead-graph or core-graph modules, so agreement
// between the two is meaningful.

#include <cstddef>
#include <optional>
#include <vector>

#include "fgs/words.hpp"

namespace fgs::oracles {

/// Ordered generating set satisfying the Nielsen conditions:
/// no identities; ‖uv‖ ≥ max(‖u‖, ‖v‖) whenever uv ≠ 1; and
/// ‖uvw‖ > ‖u‖ − ‖v‖ + ‖w‖ whenever uv ≠ 1 ≠ vw (u, v, w ∈ U^{±1}).
struct NielsenSet {
  std::vector<Word> words;
};

NielsenSet nielsen_reduce(const WordSet& z);
bool is_nielsen_reduced(const std::vector<Word>& words);
/// w ∈ ⟨N⟩ by non-lengthening peeling of generator prefixes.
bool oracle_membership(const NielsenSet& n, const Word& w);

/// The Whitehead automorphisms e ↦ a^{[e∈S]} e ā^{[ē∈S]} (a fixed) for every
/// multiplier a ∈ E^{±1} and nonempty S ⊆ E^{±1} − {a, ā}. Closed under inverse.
std::vector<GeneratorMap> whitehead_automorphisms(std::size_t rank);

inline constexpr std::size_t kSearchMaxRank = 3;
inline constexpr std::size_t kSearchMaxDepth = 4;

/// min ‖Z^Ψ‖ over products Ψ of at most `depth` Whitehead automorphisms.
/// Throws InputError for rank > 3 or depth > 4.
std::size_t whitehead_search(const WordSet& z, std::size_t rank, std::size_t depth);

/// Whether some product of at most `depth` Whitehead automorphisms maps w to
/// a single letter, passing only through images no longer than w. Allowed
/// for any depth because the length cap keeps the search finite.
bool primitivity_oracle(const Word& w, std::size_t rank, std::size_t depth);

/// min |supp(Z^Ψ rel E)| over products Ψ of at most `depth` automorphisms.
std::size_t min_support_size(const WordSet& z, std::size_t rank, std::size_t depth);

/// max |E^Ψ ∩ ⟨Z⟩| over products Ψ of at most `depth` automorphisms, with
/// membership decided by oracle_membership.
std::size_t max_basis_intersection(const WordSet& z, std::size_t rank, std::size_t depth);

}  // namespace fgs::oracles
