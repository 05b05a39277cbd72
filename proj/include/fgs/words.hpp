#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fgs {

/// Raised for malformed user input (unknown letters, bad alphabets, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A signed generator e^{+1} or e^{-1}. Letters order as x < X < y < Y < ...
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::size_t generator, bool inverse)
      : code_(static_cast<std::uint16_t>(2 * generator + (inverse ? 1 : 0))) {}

  static constexpr Letter from_code(std::size_t code) {
    return Letter(code / 2, (code & 1) != 0);
  }

  constexpr std::size_t generator() const { return code_ / 2; }
  constexpr bool is_inverse() const { return (code_ & 1) != 0; }
  constexpr int sign() const { return is_inverse() ? -1 : 1; }
  /// Dense index 2*generator + (inverse ? 1 : 0).
  constexpr std::size_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint16_t code_ = 0;
};

/// Ordered generator names. Generators are lowercase ASCII letters so that
/// the uppercase letter can denote the inverse.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view generators);

  std::size_t rank() const { return names_.size(); }
  const std::string& names() const { return names_; }
  char name(std::size_t generator) const { return names_.at(generator); }
  /// Index of a generator name, or throws InputError.
  std::size_t index_of(char name) const;

  std::string format(Letter l) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string names_;
};

/// A freely reduced word. Every constructor reduces its input.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw);

  static Word from_letter(Letter l) { return Word({l}); }

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  auto operator<=>(const Word&) const = default;

 private:
  struct Reduced {};
  Word(Reduced, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  friend Word concat(const Word& a, const Word& b);
  friend Word invert(const Word& w);

  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw);
Word concat(const Word& a, const Word& b);
Word invert(const Word& w);
/// w^k; negative k uses the inverse.
Word power(const Word& w, int k);

/// Parses "xxYY" or "x^-1 y" style input over the alphabet.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

/// Finite set of distinct nonidentity words, kept in first-seen order.
class WordSet {
 public:
  WordSet() = default;
  explicit WordSet(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(const Word& w) const;
  /// Number of identity words discarded on construction.
  std::size_t dropped_identities() const { return dropped_identities_; }

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  bool operator==(const WordSet& other) const { return words_ == other.words_; }

 private:
  std::vector<Word> words_;
  std::size_t dropped_identities_ = 0;
};

WordSet parse_word_set(const std::vector<std::string>& texts, const Alphabet& alphabet);

/// Endomorphism given by the image of each generator.
class GeneratorMap {
 public:
  GeneratorMap() = default;
  explicit GeneratorMap(std::vector<Word> images) : images_(std::move(images)) {}

  static GeneratorMap identity(std::size_t rank);

  std::size_t rank() const { return images_.size(); }
  const Word& image(std::size_t generator) const { return images_.at(generator); }
  const std::vector<Word>& images() const { return images_; }
  bool is_identity() const;

  bool operator==(const GeneratorMap&) const = default;

 private:
  std::vector<Word> images_;
};

Word apply_map(const GeneratorMap& m, const Word& w);
/// Applies m to every word. The result is again a WordSet, so identities
/// and duplicates produced by a non-injective map are dropped.
WordSet apply_map(const GeneratorMap& m, const WordSet& z);
/// Right-action composition: w^{compose(f, s)} = (w^f)^s.
GeneratorMap compose(const GeneratorMap& first, const GeneratorMap& second);

/// Generators whose letters occur in some word of z, in index order.
std::vector<std::size_t> support(const WordSet& z, const Alphabet& alphabet);
std::size_t total_length(const WordSet& z);

}  // namespace fgs
