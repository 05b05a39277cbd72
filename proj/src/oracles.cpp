#include "fgs/oracles.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace fgs::oracles {

namespace {

std::span<const Letter> left_half(const Word& w) { return w.letters().first((w.length() + 1) / 2); }

bool lex_less(std::span<const Letter> a, std::span<const Letter> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Well-order used to drive Nielsen reduction: length, then the smaller and
/// the larger of the left halves of w and w⁻¹.
struct NielsenKey {
  std::size_t length;
  std::vector<Letter> low;
  std::vector<Letter> high;

  auto operator<=>(const NielsenKey&) const = default;
};

NielsenKey key_of(const Word& w) {
  const Word inv = invert(w);
  auto a = left_half(w);
  auto b = left_half(inv);
  if (lex_less(b, a)) std::swap(a, b);
  return {w.length(), {a.begin(), a.end()}, {b.begin(), b.end()}};
}

void drop_redundant(std::vector<Word>& words) {
  std::vector<Word> kept;
  for (auto& w : words) {
    if (w.empty()) continue;
    const Word inv = invert(w);
    if (std::find(kept.begin(), kept.end(), w) != kept.end()) continue;
    if (std::find(kept.begin(), kept.end(), inv) != kept.end()) continue;
    kept.push_back(std::move(w));
  }
  words = std::move(kept);
}

bool has_prefix(const Word& w, std::span<const Letter> prefix) {
  if (prefix.size() > w.length()) return false;
  return std::equal(prefix.begin(), prefix.end(), w.letters().begin());
}

}  // namespace

NielsenSet nielsen_reduce(const WordSet& z) {
  std::vector<Word> u(z.begin(), z.end());
  drop_redundant(u);
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < u.size() && !improved; ++i) {
      const NielsenKey current = key_of(u[i]);
      for (std::size_t j = 0; j < u.size() && !improved; ++j) {
        if (j == i) continue;
        for (const Word& s : {u[j], invert(u[j])}) {
          for (const Word& candidate : {concat(u[i], s), concat(s, u[i])}) {
            if (key_of(candidate) < current) {
              u[i] = candidate;
              improved = true;
              break;
            }
          }
          if (improved) break;
        }
      }
    }
    if (improved) drop_redundant(u);
  }
  if (!is_nielsen_reduced(u)) throw std::logic_error("Nielsen reduction did not reach a reduced set");
  return {std::move(u)};
}

bool is_nielsen_reduced(const std::vector<Word>& words) {
  std::vector<Word> all;
  for (const auto& w : words) {
    if (w.empty()) return false;
    all.push_back(w);
    all.push_back(invert(w));
  }
  for (const auto& u : all) {
    for (const auto& v : all) {
      if (v == invert(u)) continue;
      const std::size_t uv = concat(u, v).length();
      if (uv < u.length() || uv < v.length()) return false;
      for (const auto& w : all) {
        if (w == invert(v)) continue;
        const std::size_t uvw = concat(concat(u, v), w).length();
        if (uvw + v.length() <= u.length() + w.length()) return false;
      }
    }
  }
  return true;
}

bool oracle_membership(const NielsenSet& n, const Word& w) {
  std::vector<Word> generators;
  for (const auto& u : n.words) {
    generators.push_back(u);
    generators.push_back(invert(u));
  }
  std::set<Word> seen{w};
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    const Word current = stack.back();
    stack.pop_back();
    if (current.empty()) return true;
    for (const auto& u : generators) {
      if (!has_prefix(current, left_half(u))) continue;
      Word rest = concat(invert(u), current);
      if (rest.length() > w.length()) continue;
      if (seen.insert(rest).second) stack.push_back(std::move(rest));
    }
  }
  return false;
}

std::vector<GeneratorMap> whitehead_automorphisms(std::size_t rank) {
  std::vector<GeneratorMap> maps;
  const std::size_t letters = 2 * rank;
  for (std::size_t a_code = 0; a_code < letters; ++a_code) {
    const Letter a = Letter::from_code(a_code);
    std::vector<Letter> others;
    for (std::size_t c = 0; c < letters; ++c) {
      if (c / 2 != a.generator()) others.push_back(Letter::from_code(c));
    }
    for (std::size_t mask = 1; mask < (std::size_t{1} << others.size()); ++mask) {
      auto in_s = [&](Letter l) {
        const auto it = std::find(others.begin(), others.end(), l);
        return it != others.end() && ((mask >> (it - others.begin())) & 1);
      };
      std::vector<Word> images;
      for (std::size_t g = 0; g < rank; ++g) {
        const Letter e(g, false);
        if (g == a.generator()) {
          images.push_back(Word::from_letter(e));
          continue;
        }
        std::vector<Letter> img;
        if (in_s(e)) img.push_back(a);
        img.push_back(e);
        if (in_s(e.inverse())) img.push_back(a.inverse());
        images.emplace_back(img);
      }
      maps.emplace_back(std::move(images));
    }
  }
  return maps;
}

namespace {

void check_guard(std::size_t rank, std::size_t depth) {
  if (rank > kSearchMaxRank) throw InputError("oracle search is limited to rank 3");
  if (depth > kSearchMaxDepth) throw InputError("oracle search is limited to depth 4");
}

WordSet image_of(const GeneratorMap& m, const WordSet& z) { return fgs::apply_map(m, z); }

std::vector<Word> image_of(const GeneratorMap& m, const std::vector<Word>& tuple) {
  std::vector<Word> out;
  out.reserve(tuple.size());
  for (const auto& w : tuple) out.push_back(fgs::apply_map(m, w));
  return out;
}

template <typename State, typename Visit>
void for_each_product(const State& start, const std::vector<GeneratorMap>& maps, std::size_t depth, Visit&& visit) {
  // visit returns false to stop the whole search.
  struct Frame {
    State state;
    std::size_t next_map;
  };
  if (!visit(start)) return;
  std::vector<Frame> stack{{start, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (stack.size() > depth || top.next_map == maps.size()) {
      stack.pop_back();
      continue;
    }
    State image = image_of(maps[top.next_map++], top.state);
    if (!visit(image)) return;
    stack.push_back({std::move(image), 0});
  }
}

std::size_t support_size(const WordSet& z) {
  std::uint64_t seen = 0;
  for (const auto& w : z) {
    for (Letter l : w.letters()) seen |= std::uint64_t{1} << l.generator();
  }
  return static_cast<std::size_t>(std::popcount(seen));
}

}  // namespace

std::size_t whitehead_search(const WordSet& z, std::size_t rank, std::size_t depth) {
  check_guard(rank, depth);
  const auto maps = whitehead_automorphisms(rank);
  std::size_t best = total_length(z);
  const std::size_t floor = z.size();
  for_each_product(z, maps, depth, [&](const WordSet& image) {
    best = std::min(best, total_length(image));
    return best > floor;
  });
  return best;
}

bool primitivity_oracle(const Word& w, std::size_t rank, std::size_t depth) {
  if (rank > kSearchMaxRank) throw InputError("oracle search is limited to rank 3");
  if (w.length() == 1) return true;
  if (w.empty()) return false;
  const auto maps = whitehead_automorphisms(rank);
  std::set<Word> seen{w};
  std::vector<Word> frontier{w};
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Word> next;
    for (const auto& current : frontier) {
      for (const auto& m : maps) {
        Word image = fgs::apply_map(m, current);
        if (image.length() > w.length()) continue;
        if (image.length() == 1) return true;
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  return false;
}

std::size_t min_support_size(const WordSet& z, std::size_t rank, std::size_t depth) {
  if (rank > kSearchMaxRank) throw InputError("oracle search is limited to rank 3");
  const auto maps = whitehead_automorphisms(rank);
  std::size_t best = support_size(z);
  const std::size_t floor = z.empty() ? 0 : 1;
  for_each_product(z, maps, depth, [&](const WordSet& image) {
    best = std::min(best, support_size(image));
    return best > floor;
  });
  return best;
}

std::size_t max_basis_intersection(const WordSet& z, std::size_t rank, std::size_t depth) {
  if (rank > kSearchMaxRank) throw InputError("oracle search is limited to rank 3");
  const auto maps = whitehead_automorphisms(rank);
  const NielsenSet reduced = nielsen_reduce(z);
  std::vector<Word> basis = GeneratorMap::identity(rank).images();
  std::size_t best = 0;
  for_each_product(basis, maps, depth, [&](const std::vector<Word>& tuple) {
    const auto count = static_cast<std::size_t>(
        std::count_if(tuple.begin(), tuple.end(), [&](const Word& w) { return oracle_membership(reduced, w); }));
    best = std::max(best, count);
    return best < rank;
  });
  return best;
}

}  // namespace fgs::oracles
