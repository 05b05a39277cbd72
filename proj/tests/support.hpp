#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fgs/words.hpp"

namespace fgs::testing {

inline Word w(const char* text, const Alphabet& a) { return parse_word(text, a); }

inline WordSet ws(std::initializer_list<const char*> texts, const Alphabet& a) {
  std::vector<std::string> v(texts.begin(), texts.end());
  return parse_word_set(v, a);
}

inline const Alphabet& alphabet(std::size_t rank) {
  static const std::vector<Alphabet> all{Alphabet(""), Alphabet("x"), Alphabet("xy"), Alphabet("xyz"),
                                         Alphabet("xyzw"), Alphabet("xyzwv"), Alphabet("xyzwvu")};
  return all.at(rank);
}

/// Every nonempty reduced word of length ≤ max_length.
inline std::vector<Word> all_words(std::size_t rank, std::size_t max_length) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) out.emplace_back(cur);
    if (cur.size() == max_length) return;
    for (std::size_t c = 0; c < 2 * rank; ++c) {
      const Letter l = Letter::from_code(c);
      if (!cur.empty() && cur.back() == l.inverse()) continue;
      cur.push_back(l);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

/// Uniform reduced word of the given length (built letter by letter).
inline Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t length) {
  std::vector<Letter> letters;
  while (letters.size() < length) {
    const Letter l = Letter::from_code(std::uniform_int_distribution<std::size_t>(0, 2 * rank - 1)(rng));
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return Word(letters);
}

/// Random word set with total length ≤ max_total and at least one word.
inline WordSet random_set(std::mt19937_64& rng, std::size_t rank, std::size_t max_words, std::size_t max_total) {
  for (;;) {
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, max_words)(rng);
    std::vector<Word> words;
    std::size_t budget = max_total;
    for (std::size_t i = 0; i < count && budget > 0; ++i) {
      const std::size_t len = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(budget, 6))(rng);
      words.push_back(random_word(rng, rank, len));
      budget -= len;
    }
    WordSet z(words);
    if (!z.empty()) return z;
  }
}

/// Product of a random sequence of elementary Nielsen moves e_i ↦ e_i e_j^±1
/// or e_j^±1 e_i, giving a random basis of the free group.
inline std::vector<Word> random_basis(std::mt19937_64& rng, std::size_t rank, std::size_t max_length) {
  std::vector<Word> basis;
  for (std::size_t g = 0; g < rank; ++g) basis.push_back(Word::from_letter(Letter(g, false)));
  if (rank < 2) return basis;
  std::uniform_int_distribution<std::size_t> pick(0, rank - 1);
  for (int step = 0; step < 40; ++step) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) continue;
    const Word other = (rng() & 1) ? basis[j] : invert(basis[j]);
    const Word next = (rng() & 1) ? concat(basis[i], other) : concat(other, basis[i]);
    if (next.length() > max_length) continue;
    basis[i] = next;
  }
  return basis;
}

}  // namespace fgs::testing
