#include "fgs/whitehead.hpp"

#include <bit>
#include <stdexcept>

namespace fgs {

LetterSet letters_of(const std::vector<std::size_t>& generators) {
  LetterSet s = 0;
  for (std::size_t g : generators) s |= letter_bit(Letter(g, false)) | letter_bit(Letter(g, true));
  return s;
}

LetterSet inverse_set(LetterSet s) {
  constexpr LetterSet even = 0x5555555555555555ULL;
  return ((s & even) << 1) | ((s >> 1) & even);
}

namespace {

std::vector<Letter> letters_in(LetterSet s) {
  std::vector<Letter> out;
  while (s != 0) {
    const int code = std::countr_zero(s);
    out.push_back(Letter::from_code(static_cast<std::size_t>(code)));
    s &= s - 1;
  }
  return out;
}

void add_word_edges(const Word& w, std::set<std::pair<WhVertex, WhVertex>>& edges) {
  if (w.empty()) return;
  WhVertex prev_inverse = kWhBasepoint;  // ē₀ = 1
  for (Letter l : w.letters()) {
    edges.emplace(prev_inverse, wh_vertex(l));
    prev_inverse = wh_vertex(l.inverse());
  }
  edges.emplace(prev_inverse, kWhBasepoint);
}

WhGraph build_graph(const WordSet& z, std::size_t rank, std::vector<std::size_t> generators) {
  WhGraph g;
  g.rank = rank;
  g.vertex_generators = std::move(generators);
  for (const auto& w : z) add_word_edges(w, g.edges);
  return g;
}

/// Vertices reachable from `start` in the undirected view, skipping `removed`.
/// Returned as a bitmask over WhVertex.
std::uint64_t component_of(const WhGraph& g, WhVertex start, std::optional<WhVertex> removed) {
  // Vertex v occupies bit v; rank ≤ 26 keeps 2·rank + 1 ≤ 53 bits.
  std::uint64_t seen = std::uint64_t{1} << start;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [u, v] : g.edges) {
      if (removed && (u == *removed || v == *removed)) continue;
      const bool has_u = (seen >> u) & 1;
      const bool has_v = (seen >> v) & 1;
      if (has_u != has_v) {
        seen |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        grew = true;
      }
    }
  }
  return seen;
}

std::uint64_t vertex_mask(const WhGraph& g) { return (g.vertex_letters() << 1) | 1; }

LetterSet letters_of_vertex_mask(std::uint64_t mask) { return mask >> 1; }

bool connected_without(const WhGraph& g, std::optional<WhVertex> removed) {
  std::uint64_t all = vertex_mask(g);
  if (removed) all &= ~(std::uint64_t{1} << *removed);
  return component_of(g, kWhBasepoint, removed) == all;
}

}  // namespace

std::vector<WhVertex> WhGraph::vertices() const {
  std::vector<WhVertex> out{kWhBasepoint};
  for (Letter l : letters_in(vertex_letters())) out.push_back(wh_vertex(l));
  return out;
}

WhGraph whitehead_graph(const WordSet& z, std::size_t rank) {
  std::vector<std::size_t> all(rank);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return build_graph(z, rank, std::move(all));
}

WhGraph whitehead_graph(const WordSet& z, const Alphabet& alphabet) {
  support(z, alphabet);  // validates letters
  return whitehead_graph(z, alphabet.rank());
}

WhGraph whitehead_graph_on_support(const WordSet& z, const Alphabet& alphabet) {
  return build_graph(z, alphabet.rank(), support(z, alphabet));
}

bool is_connected(const WhGraph& g) { return connected_without(g, std::nullopt); }

std::optional<Letter> find_cut_vertex(const WhGraph& g) {
  const auto letters = letters_in(g.vertex_letters());
  if (letters.empty()) return std::nullopt;
  if (!is_connected(g)) return letters.front();
  for (Letter l : letters) {
    if (!connected_without(g, wh_vertex(l))) return l;
  }
  return std::nullopt;
}

Cut::Cut(std::size_t rank, LetterSet d0, LetterSet d1, Letter e_star)
    : rank_(rank), d0_(d0), d1_(d1), e_star_(e_star) {
  const LetterSet all = all_letters(rank);
  if (e_star.generator() >= rank) throw std::invalid_argument("cut vertex outside the alphabet");
  if ((d0 | d1) != all) throw std::invalid_argument("cut blocks must cover E^±1");
  if ((d0 & d1) != letter_bit(e_star)) throw std::invalid_argument("cut blocks must meet exactly in e★");
  if (d1 == letter_bit(e_star)) throw std::invalid_argument("₁D must not equal {e★}");
}

LetterSet Cut::block(int alpha, int beta) const {
  const LetterSet a = alpha == 0 ? d0_ : d1_;
  const LetterSet b = beta == 0 ? d0_ : d1_;
  return a & inverse_set(b);
}

std::pair<int, int> Cut::edge_shift(std::size_t generator) const {
  if (generator == e_star_.generator()) return {eta(), eta()};
  return {chi(Letter(generator, false)), chi(Letter(generator, true))};
}

CutAutomorphism phi_of_cut(const Cut& c) {
  const Letter d = c.d_star();
  std::vector<Word> fwd;
  std::vector<Word> inv;
  fwd.reserve(c.rank());
  inv.reserve(c.rank());
  for (std::size_t g = 0; g < c.rank(); ++g) {
    const Letter e(g, false);
    if (g == d.generator()) {
      fwd.push_back(Word::from_letter(e));
      inv.push_back(Word::from_letter(e));
      continue;
    }
    std::vector<Letter> f;
    std::vector<Letter> b;
    if (c.chi(e) == 1) {
      f.push_back(d);
      b.push_back(d.inverse());
    }
    f.push_back(e);
    b.push_back(e);
    if (c.chi(e.inverse()) == 1) {
      f.push_back(d.inverse());
      b.push_back(d);
    }
    fwd.emplace_back(f);
    inv.emplace_back(b);
  }
  return {GeneratorMap(std::move(fwd)), GeneratorMap(std::move(inv))};
}

bool cut_covers(const Cut& c, const WhGraph& g) {
  // Basepoint is vertex bit 0; letters are shifted by one.
  const std::uint64_t side0 = (c.d0() << 1) | 1;
  const std::uint64_t side1 = c.d1() << 1;
  for (const auto& [u, v] : g.edges) {
    const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if ((pair & ~side0) != 0 && (pair & ~side1) != 0) return false;
  }
  return true;
}

Cut cut_subroutine(const WordSet& z, const Alphabet& alphabet, Letter e_star) {
  const std::size_t rank = alphabet.rank();
  const WhGraph g = whitehead_graph_on_support(z, alphabet);
  const LetterSet support_letters = g.vertex_letters();
  const LetterSet outside = all_letters(rank) & ~support_letters;

  if (is_connected(g)) {
    if (!contains(support_letters, e_star)) throw std::logic_error("e★ is not a vertex of Wh(Z rel E_Z)");
    const LetterSet x0 = letters_of_vertex_mask(component_of(g, kWhBasepoint, wh_vertex(e_star)));
    const LetterSet x1 = support_letters & ~x0 & ~letter_bit(e_star);
    if (x1 == 0) throw std::logic_error("e★ is not a Whitehead cut-vertex of Wh(Z rel E_Z)");
    return Cut(rank, x0 | letter_bit(e_star) | outside, x1 | letter_bit(e_star), e_star);
  }

  const LetterSet d = letters_of_vertex_mask(component_of(g, kWhBasepoint, std::nullopt)) & support_letters;
  const LetterSet candidates = d & ~inverse_set(d);
  if (candidates == 0) throw std::logic_error("disconnected Whitehead graph with D = D^{-1}");
  const Letter chosen = Letter::from_code(static_cast<std::size_t>(std::countr_zero(candidates)));
  return Cut(rank, d | outside, (support_letters & ~d) | letter_bit(chosen), chosen);
}

ReductionTrace cut_vertex_algorithm(const WordSet& z, const Alphabet& alphabet) {
  ReductionTrace trace;
  trace.phi_total = GeneratorMap::identity(alphabet.rank());
  trace.phi_total_inverse = trace.phi_total;
  trace.final_set = z;
  for (;;) {
    const auto cut_vertex = find_cut_vertex(whitehead_graph_on_support(trace.final_set, alphabet));
    if (!cut_vertex) break;
    const Cut cut = cut_subroutine(trace.final_set, alphabet, *cut_vertex);
    const auto phi = phi_of_cut(cut);
    WordSet next = apply_map(phi.phi_inverse, trace.final_set);
    const std::size_t before = total_length(trace.final_set);
    const std::size_t after = total_length(next);
    if (after >= before) throw std::logic_error("cut-vertex step failed to shorten Z");
    trace.phi_total = compose(phi.phi, trace.phi_total);
    trace.phi_total_inverse = compose(trace.phi_total_inverse, phi.phi_inverse);
    trace.final_set = std::move(next);
    trace.steps.push_back({cut, after});
  }
  return trace;
}

std::vector<Word> closure_basis(const ReductionTrace& trace, const Alphabet& alphabet) {
  std::vector<Word> out;
  for (std::size_t g : support(trace.final_set, alphabet)) out.push_back(trace.phi_total.image(g));
  return out;
}

std::vector<Word> closure_basis(const WordSet& z, const Alphabet& alphabet) {
  return closure_basis(cut_vertex_algorithm(z, alphabet), alphabet);
}

SubbasisVerdict is_subbasis(const WordSet& z, const Alphabet& alphabet) {
  SubbasisVerdict verdict;
  verdict.trace = cut_vertex_algorithm(z, alphabet);
  for (const auto& w : z) {
    if (z.contains(invert(w))) return verdict;
  }
  for (const auto& w : verdict.trace.final_set) {
    if (w.length() != 1) return verdict;
  }
  verdict.is_subbasis = true;
  verdict.extended_basis = verdict.trace.phi_total.images();
  // Z′ = Z^{Φ̄} keeps the order of Z, so the i-th reduced letter came from z_i.
  const auto& originals = z.words();
  const auto& reduced = verdict.trace.final_set.words();
  std::vector<Word> flips = GeneratorMap::identity(alphabet.rank()).images();
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const Letter l = reduced[i].front();
    verdict.extended_basis[l.generator()] = originals[i];
    if (l.is_inverse()) flips[l.generator()] = Word::from_letter(l);
  }
  verdict.extended_basis_inverse = compose(verdict.trace.phi_total_inverse, GeneratorMap(std::move(flips)));
  return verdict;
}

}  // namespace fgs
