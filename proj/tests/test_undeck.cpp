#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "segalkit/bridge.hpp"
#include "segalkit/fixtures.hpp"
#include "segalkit/undecking.hpp"

using namespace segal;

namespace {

UnaryOpCat poset_opcat() {
  return operadic_from_upper_two_segal(nerve(chain_poset(2), 5));
}

}  // namespace

TEST_CASE("chain counts match the source nerve") {
  UnaryOpCat O = poset_opcat();
  std::vector<long long> expect{3, 6, 10, 15, 21, 28};
  for (int n = 0; n <= 5; ++n)
    CHECK(static_cast<long long>(chains_of_length(O, n).size()) == expect[n]);
}

TEST_CASE("undecking is a lawful simplicial set") {
  TruncSSet X = undeck(poset_opcat(), 5);
  X.validate_structure();
  CHECK(check_simplicial_identities(X).passed);
  CHECK(check_segal(X).passed);
  CHECK(check_two_segal(X, TwoSegalVariant::Lower).passed);
  for (int n = 0; n <= 5; ++n)
    CHECK(X.size(n) == std::vector<long long>{3, 6, 10, 15, 21, 28}[n]);
}

TEST_CASE("face and degeneracy actions on chains") {
  UnaryOpCat O = poset_opcat();
  std::vector<Chain> level3 = chains_of_length(O, 3);
  REQUIRE_FALSE(level3.empty());
  for (const Chain& c : level3) {
    Chain t = top_face(O, c);
    CHECK(t.length() == 2);
    CHECK(O.chosen.count(t.terminal) == 1);
    for (int i = 0; i < 3; ++i) {
      Chain d = inner_face(O, c, i);
      CHECK(d.length() == 2);
      CHECK(d.terminal == c.terminal);
    }
    for (int j = 0; j <= 3; ++j) {
      Chain s = degeneracy(O, c, j);
      CHECK(s.length() == 4);
      CHECK(s.terminal == c.terminal);
    }
  }
}

TEST_CASE("fiber tower of a chain") {
  UnaryOpCat O = poset_opcat();
  for (const Chain& c : chains_of_length(O, 3)) {
    FiberGrid g = simplex_grid(O, c);
    REQUIRE(g.rows.size() == 3);
    CHECK(g.rows[0].length() == 3);
    CHECK(g.rows[1].length() == 2);
    CHECK(g.rows[2].length() == 1);
    CHECK(O.chosen.count(g.apex) == 1);
    REQUIRE(g.spine.size() == 7);
    // Even positions are chosen terminals, starting from the apex.
    CHECK(g.spine[0] == g.apex);
    for (size_t i = 0; i < g.spine.size(); i += 2)
      CHECK(O.chosen.count(g.spine[i]) == 1);
    CHECK(g.coherence.passed);
  }
}

TEST_CASE("round trip starting from a simplicial set") {
  CHECK(verify_round_trips(nerve(chain_poset(2), 5), 5).passed);
  CHECK(verify_round_trips(nerve(indiscrete_groupoid(2), 4), 4).passed);
  CHECK(verify_round_trips(nerve(random_category(61, 3), 4), 4).passed);
  CHECK(verify_round_trips(nerve(random_poset(62, 4), 4), 4).passed);
}

TEST_CASE("round trip starting from the operadic side") {
  CHECK(verify_round_trips(poset_opcat(), 5).passed);
  CHECK(verify_round_trips(
            operadic_from_upper_two_segal(nerve(indiscrete_groupoid(2), 4)), 4)
            .passed);
  CHECK(verify_round_trips(
            operadic_from_upper_two_segal(nerve(random_category(63, 3), 4)), 4)
            .passed);
}

TEST_CASE("failed unique lifting surfaces in the lower squares") {
  TruncSSet X = undeck(opcat_without_blowup(), 4);
  X.validate_structure();
  CHECK(check_simplicial_identities(X).passed);
  CHECK_FALSE(check_two_segal(X, TwoSegalVariant::Lower).passed);
}
