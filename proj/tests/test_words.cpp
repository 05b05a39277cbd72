#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <random>

#include "fgs/io.hpp"
#include "support.hpp"

using namespace fgs;
using fgs::testing::w;
using fgs::testing::ws;

namespace {

// Free reduction of "xYy..." strings with an explicit stack.
std::string stack_reduce(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (!out.empty() && out.back() != c && std::tolower(out.back()) == std::tolower(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string string_invert(const std::string& s) {
  std::string out(s.rbegin(), s.rend());
  for (char& c : out) c = std::islower(c) ? static_cast<char>(std::toupper(c)) : static_cast<char>(std::tolower(c));
  return out;
}

const Alphabet xy("xy");
const Alphabet xyz("xyz");

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(format_word(w("xXy", xy), xy) == "y");
  CHECK(reduce({}).empty());
  CHECK(format_word(w("xYyx", xy), xy) == "xx");
  CHECK(stack_reduce("xYyx") == "xx");
}

TEST_CASE("parse accepts ^-1 and the identity") {
  CHECK(w("x^-1 y", xy) == w("Xy", xy));
  CHECK(w("1", xy).empty());
  CHECK(w("", xy).empty());
  CHECK_THROWS_AS(w("xq", xy), InputError);
  CHECK_THROWS_AS(Alphabet("xx"), InputError);
  CHECK_THROWS_AS(Alphabet("X"), InputError);
}

TEST_CASE("concat and invert") {
  CHECK(format_word(concat(w("xy", xy), w("Yx", xy)), xy) == "xx");
  CHECK(concat(w("xYx", xy), Word{}) == w("xYx", xy));
  CHECK(concat(w("xYx", xy), invert(w("xYx", xy))).empty());
  CHECK(format_word(invert(w("xy", xy)), xy) == "YX");
  CHECK(invert(Word{}).empty());
  CHECK(format_word(invert(w("xxyy", xy)), xy) == "YYXX");
  CHECK(power(w("xy", xy), -2) == w("YXYX", xy));
  CHECK(power(w("xy", xy), 0).empty());
}

TEST_CASE("reduction agrees with the stack reducer on random raw strings") {
  std::mt19937_64 rng(7);
  const std::string letters = "xXyYzZ";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string raw;
    const int len = static_cast<int>(rng() % 14);
    for (int i = 0; i < len; ++i) raw += letters[rng() % letters.size()];
    const Word parsed = parse_word(raw, xyz);
    CHECK(format_word(parsed, xyz) == stack_reduce(raw));
    CHECK(format_word(invert(parsed), xyz) == string_invert(stack_reduce(raw)));
    CHECK(invert(invert(parsed)) == parsed);
  }
}

TEST_CASE("concat length parity and stack agreement") {
  const auto words = fgs::testing::all_words(2, 3);
  for (const auto& a : words) {
    for (const auto& b : words) {
      const Word ab = concat(a, b);
      CHECK((ab.length() + a.length() + b.length()) % 2 == 0);
      CHECK(format_word(ab, xy) == stack_reduce(format_word(a, xy) + format_word(b, xy)));
    }
  }
}

TEST_CASE("apply_map substitutes and reduces") {
  const GeneratorMap m({w("x", xy), w("xy", xy)});
  CHECK(apply_map(m, w("Xy", xy)) == w("y", xy));
  CHECK(apply_map(GeneratorMap::identity(2), w("xYYx", xy)) == w("xYYx", xy));
  CHECK(apply_map(m, Word{}).empty());
  for (const auto& a : fgs::testing::all_words(2, 3)) {
    CHECK(apply_map(m, invert(a)) == invert(apply_map(m, a)));
    for (const auto& b : fgs::testing::all_words(2, 2)) {
      CHECK(apply_map(m, concat(a, b)) == concat(apply_map(m, a), apply_map(m, b)));
    }
  }
}

TEST_CASE("compose follows the right action") {
  const GeneratorMap f({w("x", xy), w("xy", xy)});
  const GeneratorMap s({w("X", xy), w("y", xy)});
  CHECK(compose(GeneratorMap::identity(2), f) == f);
  CHECK(apply_map(compose(f, s), w("y", xy)) == w("Xy", xy));
  const GeneratorMap f_inv({w("x", xy), w("Xy", xy)});
  CHECK(compose(f, f_inv).is_identity());
  for (const auto& a : fgs::testing::all_words(2, 4)) {
    CHECK(apply_map(compose(f, s), a) == apply_map(s, apply_map(f, a)));
  }
}

TEST_CASE("word sets drop identities and duplicates") {
  const WordSet z = parse_word_set({"xy", "1", "xy", "xXy", ""}, xy);
  CHECK(z.size() == 2);
  CHECK(z.dropped_identities() == 2);
  CHECK(format_word(z.words()[0], xy) == "xy");
  CHECK(format_word(z.words()[1], xy) == "y");
}

TEST_CASE("support and total length") {
  CHECK(support(ws({"xxyy"}, xyz), xyz) == std::vector<std::size_t>{0, 1});
  CHECK(support(WordSet{}, xyz).empty());
  CHECK(support(ws({"xY", "z"}, xyz), xyz) == std::vector<std::size_t>{0, 1, 2});
  CHECK(total_length(ws({"xxyy"}, xy)) == 4);
  CHECK(total_length(WordSet{}) == 0);
  CHECK(total_length(ws({"xy", "y"}, xy)) == 3);
}

TEST_CASE("word set JSON round trip") {
  const WordSet z = ws({"xxYY", "z"}, xyz);
  const auto j = io::word_set_json(z, xyz);
  CHECK(j.dump() == R"({"generators":"xyz","words":["xxYY","z"]})");
  Alphabet back;
  CHECK(io::word_set_from_json(j, back) == z);
  CHECK(back == xyz);
  CHECK_THROWS_AS(io::word_set_from_json(io::json::parse(R"({"words":[]})"), back), InputError);
}
