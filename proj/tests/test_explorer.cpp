#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fgs/explorer.hpp"
#include "fgs/io.hpp"
#include "fgs/oracles.hpp"
#include "support.hpp"

using namespace fgs;
using fgs::testing::ws;

namespace {

const Alphabet xy("xy");

// Cuts counted independently: ordered pairs (e★, ₁D) with ₁D ∋ e★ a proper
// superset of {e★}, and ₀D = complement ∪ {e★} a proper superset too.
std::size_t count_cuts_by_brute_force(std::size_t rank) {
  const std::size_t letters = 2 * rank;
  std::size_t count = 0;
  for (std::size_t star = 0; star < letters; ++star) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << letters); ++mask) {
      if (!((mask >> star) & 1)) continue;
      const std::size_t d1_size = static_cast<std::size_t>(std::popcount(mask));
      const std::size_t d0_size = letters - d1_size + 1;
      if (d1_size >= 2 && d0_size >= 1) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("cut enumeration") {
  CHECK(enumerate_cuts(0).empty());
  CHECK(enumerate_cuts(1).size() == 2);
  CHECK(enumerate_cuts(2).size() == 28);
  CHECK(enumerate_cuts(3).size() == 186);
  for (std::size_t rank = 1; rank <= 4; ++rank) {
    const auto cuts = enumerate_cuts(rank);
    CHECK(cuts.size() == count_cuts_by_brute_force(rank));
    CHECK(cuts.size() == 2 * rank * ((std::size_t{1} << (2 * rank - 1)) - 1));
    std::set<std::tuple<LetterSet, LetterSet, std::size_t>> distinct;
    for (const auto& c : cuts) {
      CHECK_NOTHROW(Cut(rank, c.d0(), c.d1(), c.e_star()));
      distinct.emplace(c.d0(), c.d1(), c.e_star().code());
    }
    CHECK(distinct.size() == cuts.size());
  }
}

TEST_CASE("exploring the whole group and the trivial group") {
  const auto whole = explore(ws({"x", "y"}, xy), xy);
  CHECK(whole.nodes.size() == 1);
  CHECK(best_node(whole) == 0);
  CHECK(whole.nodes[0].loop_count == 2);

  const auto trivial = explore(WordSet{}, xy);
  CHECK(trivial.nodes.size() == 1);
  CHECK(trivial.nodes[0].loop_count == 0);
}

TEST_CASE("exploring the squares subgroup") {
  const auto g = explore(ws({"xx", "y"}, xy), xy);
  CHECK(g.nodes.size() == 34);
  for (const auto& n : g.nodes) CHECK(n.core.edge_count() <= 3);
  CHECK(g.nodes[best_node(g)].loop_count == 1);
  std::set<std::string> keys;
  for (const auto& n : g.nodes) keys.insert(n.core.key().bytes);
  CHECK(keys.size() == g.nodes.size());
  for (std::size_t i = 1; i < g.nodes.size(); ++i) {
    const auto [parent, cut] = *g.nodes[i].parent;
    CHECK(parent < i);
    CHECK(boundary(g.nodes[parent].core, g.cuts[cut]) == g.nodes[i].core);
    CHECK(g.nodes[i].core.edge_count() <= g.nodes[parent].core.edge_count());
  }
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(explore(ws({"xx", "y"}, xy), xy, {3, false}), BudgetExceeded);
  CHECK_THROWS_AS(explore(ws({"xx", "y"}, xy), xy, {0, false}), InputError);
  const Alphabet six("abcdef");
  CHECK_THROWS_AS(explore(ws({"a"}, six), six), InputError);
  try {
    explore(ws({"xx", "y"}, xy), xy, {5, false});
    FAIL("budget not enforced");
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == 5);
    CHECK(std::string(e.what()).find("5") != std::string::npos);
  }
}

TEST_CASE("sandwich examples") {
  const auto pentagon = sandwich(ws({"xxyy"}, xy), xy);
  CHECK(pentagon.best_count == 0);
  CHECK(pentagon.lower_layer.empty());
  CHECK(pentagon.upper_basis.size() == 2);

  const WordSet squares = ws({"xx", "y"}, xy);
  const auto s = sandwich(squares, xy);
  CHECK(s.best_count == 1);
  REQUIRE(s.lower_layer.size() == 1);
  CHECK(is_member(core_of(squares, xy), s.lower_layer[0]));
  CHECK(s.upper_basis.size() == 2);

  const auto whole = sandwich(ws({"x", "y"}, xy), xy);
  CHECK(whole.best_count == 2);
  CHECK(whole.lower_layer.size() == 2);
  CHECK(whole.upper_basis.size() == 2);
}

TEST_CASE("sandwich invariants on random inputs") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const WordSet z = fgs::testing::random_set(rng, 2, 2, 6);
    const auto r = sandwich(z, xy);
    const GeneratorMap e(r.full_basis);
    CHECK(compose(e, r.phi_composition_inverse).is_identity());
    CHECK(compose(r.phi_composition_inverse, e).is_identity());
    CHECK(r.lower_layer.size() >= r.best_count);
    const CoreGraph g = core_of(z, xy);
    for (const auto& word : r.lower_layer) {
      CHECK(is_member(g, word));
      CHECK(std::find(r.full_basis.begin(), r.full_basis.end(), word) != r.full_basis.end());
    }
    const auto upper = oracles::nielsen_reduce(WordSet(r.upper_basis));
    for (const auto& word : z) CHECK(oracles::oracle_membership(upper, word));
  }
}

TEST_CASE("no shallow basis beats the best count") {
  for (const auto& z : {ws({"xxyy"}, xy), ws({"xx", "y"}, xy), ws({"x", "y"}, xy), ws({"xyXY"}, xy)}) {
    const auto r = sandwich(z, xy);
    CHECK(oracles::max_basis_intersection(z, 2, 2) <= r.best_count);
  }
}

TEST_CASE("exploration is deterministic") {
  const WordSet z = ws({"xxy", "yxY"}, xy);
  const auto a = explore(z, xy);
  const auto b = explore(z, xy);
  CHECK(io::exploration_json_lines(a) == io::exploration_json_lines(b));
  CHECK(io::sandwich_json(sandwich(z, xy, a), xy).dump() == io::sandwich_json(sandwich(z, xy, b), xy).dump());
}
