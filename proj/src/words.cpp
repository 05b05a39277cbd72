#include "fgs/words.hpp"

#include <algorithm>
#include <cctype>

namespace fgs {

Alphabet::Alphabet(std::string_view generators) : names_(generators) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const char c = names_[i];
    if (c < 'a' || c > 'z') {
      throw InputError(std::string("generator names must be lowercase letters, got '") + c + "'");
    }
    if (names_.find(c) != i) {
      throw InputError(std::string("duplicate generator '") + c + "'");
    }
  }
}

std::size_t Alphabet::index_of(char name) const {
  const auto pos = names_.find(name);
  if (pos == std::string::npos) {
    throw InputError(std::string("unknown generator '") + name + "'");
  }
  return pos;
}

std::string Alphabet::format(Letter l) const {
  const char c = name(l.generator());
  return std::string(1, l.is_inverse() ? static_cast<char>(std::toupper(c)) : c);
}

Word reduce(std::span<const Letter> raw) { return Word(raw); }

Word::Word(std::span<const Letter> raw) {
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word::Word(std::initializer_list<Letter> raw) : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word concat(const Word& a, const Word& b) {
  const auto& x = a.letters_;
  const auto& y = b.letters_;
  std::size_t k = 0;
  while (k < x.size() && k < y.size() && x[x.size() - 1 - k] == y[k].inverse()) ++k;
  std::vector<Letter> out;
  out.reserve(x.size() + y.size() - 2 * k);
  out.insert(out.end(), x.begin(), x.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(k), y.end());
  return Word(Word::Reduced{}, std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(Word::Reduced{}, std::move(out));
}

Word power(const Word& w, int k) {
  const Word base = k < 0 ? invert(w) : w;
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = concat(out, base);
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') continue;
    if (c == '1' && raw.empty() && text.find_first_not_of(" 1") == std::string_view::npos) continue;
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw InputError("unexpected character '" + std::string(1, c) + "' in word \"" + std::string(text) + "\"");
    }
    const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    const std::size_t g = alphabet.index_of(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    bool inverse = upper;
    if (text.substr(i + 1, 3) == "^-1") {
      inverse = !inverse;
      i += 3;
    }
    raw.emplace_back(g, inverse);
  }
  return Word(raw);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  out.reserve(w.length());
  for (Letter l : w.letters()) out += alphabet.format(l);
  return out;
}

WordSet::WordSet(std::vector<Word> words) {
  for (auto& w : words) {
    if (w.empty()) {
      ++dropped_identities_;
      continue;
    }
    if (!contains(w)) words_.push_back(std::move(w));
  }
}

bool WordSet::contains(const Word& w) const {
  return std::find(words_.begin(), words_.end(), w) != words_.end();
}

WordSet parse_word_set(const std::vector<std::string>& texts, const Alphabet& alphabet) {
  std::vector<Word> words;
  words.reserve(texts.size());
  for (const auto& t : texts) words.push_back(parse_word(t, alphabet));
  return WordSet(std::move(words));
}

GeneratorMap GeneratorMap::identity(std::size_t rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (std::size_t g = 0; g < rank; ++g) images.push_back(Word::from_letter(Letter(g, false)));
  return GeneratorMap(std::move(images));
}

bool GeneratorMap::is_identity() const { return *this == identity(rank()); }

Word apply_map(const GeneratorMap& m, const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.length() * 3);
  for (Letter l : w.letters()) {
    const auto img = m.image(l.generator()).letters();
    if (l.is_inverse()) {
      for (auto it = img.rbegin(); it != img.rend(); ++it) raw.push_back(it->inverse());
    } else {
      raw.insert(raw.end(), img.begin(), img.end());
    }
  }
  return Word(raw);
}

WordSet apply_map(const GeneratorMap& m, const WordSet& z) {
  std::vector<Word> out;
  out.reserve(z.size());
  for (const auto& w : z) out.push_back(apply_map(m, w));
  return WordSet(std::move(out));
}

GeneratorMap compose(const GeneratorMap& first, const GeneratorMap& second) {
  std::vector<Word> images;
  images.reserve(first.rank());
  for (const auto& img : first.images()) images.push_back(apply_map(second, img));
  return GeneratorMap(std::move(images));
}

std::vector<std::size_t> support(const WordSet& z, const Alphabet& alphabet) {
  std::vector<bool> seen(alphabet.rank(), false);
  for (const auto& w : z) {
    for (Letter l : w.letters()) {
      if (l.generator() >= alphabet.rank()) throw InputError("word uses a generator outside the alphabet");
      seen[l.generator()] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < seen.size(); ++g) {
    if (seen[g]) out.push_back(g);
  }
  return out;
}

std::size_t total_length(const WordSet& z) {
  std::size_t n = 0;
  for (const auto& w : z) n += w.length();
  return n;
}

}  // namespace fgs
