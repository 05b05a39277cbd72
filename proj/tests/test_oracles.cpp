#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fgs/core_graph.hpp"
#include "fgs/explorer.hpp"
#include "fgs/oracles.hpp"
#include "support.hpp"

using namespace fgs;
using namespace fgs::oracles;
using fgs::testing::w;
using fgs::testing::ws;

namespace {

const Alphabet xy("xy");

bool same_subgroup(const NielsenSet& a, const WordSet& b) {
  const auto nb = nielsen_reduce(b);
  for (const auto& word : a.words) {
    if (!oracle_membership(nb, word)) return false;
  }
  for (const auto& word : b) {
    if (!oracle_membership(a, word)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Nielsen reduction examples") {
  const auto n = nielsen_reduce(ws({"x", "xy"}, xy));
  std::set<Word> got(n.words.begin(), n.words.end());
  CHECK(n.words.size() == 2);
  CHECK((got.count(w("x", xy)) + got.count(w("X", xy))) == 1);
  CHECK((got.count(w("y", xy)) + got.count(w("Y", xy))) == 1);

  CHECK(nielsen_reduce(ws({"x", "X"}, xy)).words.size() == 1);

  const WordSet two = ws({"xxyy", "yyxx"}, xy);
  const auto m = nielsen_reduce(two);
  CHECK(is_nielsen_reduced(m.words));
  CHECK(same_subgroup(m, two));
}

TEST_CASE("Nielsen condition checker") {
  CHECK(is_nielsen_reduced({w("x", xy), w("y", xy)}));
  CHECK_FALSE(is_nielsen_reduced({w("x", xy), w("xy", xy)}));
  CHECK_FALSE(is_nielsen_reduced({Word{}}));
  CHECK(is_nielsen_reduced({w("xx", xy), w("y", xy)}));
}

TEST_CASE("Nielsen reduction preserves the subgroup") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rank = 2 + trial % 2;
    const Alphabet& a = fgs::testing::alphabet(rank);
    const WordSet z = fgs::testing::random_set(rng, rank, 4, 14);
    const auto n = nielsen_reduce(z);
    CHECK(is_nielsen_reduced(n.words));
    CHECK(core_of(WordSet(n.words), a) == core_of(z, a));
  }
}

TEST_CASE("oracle membership examples") {
  const auto n = nielsen_reduce(ws({"xx", "y"}, xy));
  CHECK(oracle_membership(n, w("xxy", xy)));
  CHECK_FALSE(oracle_membership(n, w("x", xy)));
  CHECK(oracle_membership(n, Word{}));
  CHECK(oracle_membership(NielsenSet{}, Word{}));
  CHECK_FALSE(oracle_membership(NielsenSet{}, w("x", xy)));
}

TEST_CASE("Whitehead automorphism enumeration") {
  CHECK(whitehead_automorphisms(1).empty());
  const auto two = whitehead_automorphisms(2);
  CHECK(two.size() == 12);
  CHECK(whitehead_automorphisms(3).size() == 90);
  const std::set<std::vector<Word>> distinct = [&] {
    std::set<std::vector<Word>> s;
    for (const auto& m : two) s.insert(m.images());
    return s;
  }();
  CHECK(distinct.size() == two.size());
  // Closed under inverses: each map has a partner composing to the identity.
  for (const auto& m : two) {
    bool paired = false;
    for (const auto& other : two) paired = paired || compose(m, other).is_identity();
    CHECK(paired);
  }
  // The same set as the cut automorphisms with their inverses, minus the identity.
  std::set<std::vector<Word>> from_cuts;
  for (const auto& c : enumerate_cuts(2)) {
    const auto p = phi_of_cut(c);
    if (!p.phi.is_identity()) from_cuts.insert(p.phi.images());
    if (!p.phi_inverse.is_identity()) from_cuts.insert(p.phi_inverse.images());
  }
  CHECK(from_cuts == distinct);
}

TEST_CASE("Whitehead search") {
  CHECK(whitehead_search(ws({"xxy"}, xy), 2, 2) == 1);
  CHECK(whitehead_search(ws({"xxyy"}, xy), 2, 4) == 4);
  CHECK(whitehead_search(ws({"x"}, xy), 2, 3) == 1);
  CHECK(whitehead_search(WordSet{}, 2, 2) == 0);
  CHECK_THROWS_AS(whitehead_search(ws({"x"}, xy), 4, 1), InputError);
  CHECK_THROWS_AS(whitehead_search(ws({"x"}, xy), 2, 5), InputError);
}

TEST_CASE("primitivity oracle") {
  CHECK(primitivity_oracle(w("xxy", xy), 2, 3));
  CHECK_FALSE(primitivity_oracle(w("xxyy", xy), 2, 4));
  CHECK(primitivity_oracle(w("y", xy), 2, 0));
  CHECK_FALSE(primitivity_oracle(w("xx", xy), 2, 2));
  CHECK(primitivity_oracle(w("xxxxxxxy", xy), 2, 8));
  CHECK_THROWS_AS(primitivity_oracle(w("x", xy), 4, 1), InputError);
}

TEST_CASE("support and basis searches") {
  CHECK(min_support_size(ws({"xxy"}, xy), 2, 2) == 1);
  CHECK(min_support_size(ws({"xxyy"}, xy), 2, 2) == 2);
  CHECK(min_support_size(WordSet{}, 2, 2) == 0);
  CHECK(max_basis_intersection(ws({"x", "y"}, xy), 2, 1) == 2);
  CHECK(max_basis_intersection(ws({"xx", "y"}, xy), 2, 3) == 1);
  CHECK(max_basis_intersection(ws({"xxyy"}, xy), 2, 3) == 0);
}
