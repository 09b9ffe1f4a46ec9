#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "segalkit/monotone.hpp"

using namespace segal;

namespace {

// All weakly monotone maps [a] -> [b], by direct enumeration.
std::vector<MonotoneMap> all_maps(int a, int b) {
  std::vector<MonotoneMap> out;
  std::vector<int> vals(a + 1, 0);
  while (true) {
    MonotoneMap f{a, b, vals};
    bool mono = true;
    for (int t = 0; t + 1 <= a; ++t)
      if (vals[t] > vals[t + 1]) mono = false;
    if (mono) out.push_back(f);
    int k = a;
    while (k >= 0 && vals[k] == b) vals[k--] = 0;
    if (k < 0) break;
    ++vals[k];
  }
  return out;
}

}  // namespace

TEST_CASE("basic generators and validation") {
  CHECK(MonotoneMap::identity(2).values == std::vector<int>{0, 1, 2});
  CHECK(MonotoneMap::identity(0).is_identity());

  // coface(n, i) misses exactly i.
  CHECK(MonotoneMap::coface(1, 0).values == std::vector<int>{1});
  CHECK(MonotoneMap::coface(1, 1).values == std::vector<int>{0});
  CHECK(MonotoneMap::coface(3, 2).values == std::vector<int>{0, 1, 3});

  // codegeneracy(n, j) repeats exactly j.
  CHECK(MonotoneMap::codegeneracy(0, 0).values == std::vector<int>{0, 0});
  CHECK(MonotoneMap::codegeneracy(2, 1).values == std::vector<int>{0, 1, 1, 2});

  MonotoneMap bad{1, 1, {1, 0}};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  MonotoneMap out_of_range{0, 1, {2}};
  CHECK_THROWS_AS(out_of_range.validate(), ValidationError);
}

TEST_CASE("cosimplicial relations under compose") {
  // coface_j . coface_i = coface_i . coface_{j-1} for i < j (maps into [n+1]).
  for (int n = 1; n <= 4; ++n)
    for (int j = 1; j <= n + 1; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(MonotoneMap::coface(n + 1, j), MonotoneMap::coface(n, i)) ==
              compose(MonotoneMap::coface(n + 1, i), MonotoneMap::coface(n, j - 1)));

  // codegeneracy_j . coface_i mixed relations, as maps [n-1] -> [n-1].
  for (int n = 1; n <= 4; ++n)
    for (int j = 0; j <= n - 1; ++j)
      for (int i = 0; i <= n; ++i) {
        MonotoneMap lhs = compose(MonotoneMap::codegeneracy(n - 1, j),
                                  MonotoneMap::coface(n, i));
        if (i < j) {
          CHECK(lhs == compose(MonotoneMap::coface(n - 1, i),
                               MonotoneMap::codegeneracy(n - 2, j - 1)));
        } else if (i == j || i == j + 1) {
          CHECK(lhs.is_identity());
        } else {
          CHECK(lhs == compose(MonotoneMap::coface(n - 1, i - 1),
                               MonotoneMap::codegeneracy(n - 2, j)));
        }
      }
}

TEST_CASE("compose rejects mismatched dimensions") {
  CHECK_THROWS_AS(compose(MonotoneMap::coface(3, 0), MonotoneMap::coface(1, 0)),
                  ValidationError);
}

TEST_CASE("frozen functor images") {
  // Bottom-cone image of the edge inclusion missing 0.
  MonotoneMap d0 = MonotoneMap::coface(1, 0);  // [0] -> [1], value 1
  MonotoneMap lo = delta_map_image(DeltaFunctor::LowerDec, d0);
  CHECK(lo.source_dim == 1);
  CHECK(lo.target_dim == 2);
  CHECK(lo.values == std::vector<int>{0, 2});

  MonotoneMap up = delta_map_image(DeltaFunctor::UpperDec, d0);
  CHECK(up.values == std::vector<int>{0, 2});

  // Doubling functor on the collapse [1] -> [0].
  MonotoneMap s0 = MonotoneMap::codegeneracy(0, 0);
  MonotoneMap q = delta_map_image(DeltaFunctor::Subdivision, s0);
  CHECK(q.source_dim == 3);
  CHECK(q.target_dim == 1);
  CHECK(q.values == std::vector<int>{0, 0, 1, 1});

  // Doubling the identity of [1] gives the identity of [3].
  CHECK(delta_map_image(DeltaFunctor::Subdivision, MonotoneMap::identity(1))
            .is_identity());

  // Reversal swaps the two vertex inclusions into [1].
  CHECK(delta_map_image(DeltaFunctor::Reversal, d0) ==
        MonotoneMap::coface(1, 1));
}

TEST_CASE("functoriality on a dense sample") {
  // Every functor here must send compositions to compositions; checked over
  // all pairs of composable monotone maps with dimensions <= 3.
  for (DeltaFunctor k : {DeltaFunctor::LowerDec, DeltaFunctor::UpperDec,
                         DeltaFunctor::Subdivision, DeltaFunctor::Reversal}) {
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 2; ++c)
          for (const MonotoneMap& f : all_maps(a, b))
            for (const MonotoneMap& g : all_maps(b, c)) {
              MonotoneMap lhs = delta_map_image(k, compose(g, f));
              MonotoneMap rhs =
                  compose(delta_map_image(k, g), delta_map_image(k, f));
              REQUIRE(lhs == rhs);
            }
    CHECK(delta_map_image(k, MonotoneMap::identity(2)).is_identity());
  }
}

TEST_CASE("doubled maps are reversal-fixed") {
  // The doubling functor lands in self-dual maps, which is why the
  // subdivision of a simplicial set agrees with that of its opposite.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const MonotoneMap& f : all_maps(a, b)) {
        MonotoneMap q = delta_map_image(DeltaFunctor::Subdivision, f);
        CHECK(delta_map_image(DeltaFunctor::Reversal, q) == q);
      }
}
