#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "segalkit/bridge.hpp"
#include "segalkit/fixtures.hpp"
#include "segalkit/util.hpp"

using namespace segal;

namespace {

// The relabelling functor from C onto the category rebuilt from its nerve:
// objects keep their names, an arrow becomes the singleton chain on it.
Functor singleton_chain_functor(const FinCat& C) {
  Functor F;
  for (const std::string& x : C.objects) F.on_objects[x] = x;
  for (const std::string& a : C.arrows) F.on_arrows[a] = encode_list({a});
  return F;
}

}  // namespace

TEST_CASE("indiscrete nerve doubles per level") {
  TruncSSet S = nerve(indiscrete_groupoid(2), 3);
  for (int n = 0; n <= 3; ++n) CHECK(S.size(n) == (1LL << (n + 1)));
  CHECK(check_simplicial_identities(S).passed);
  CHECK(check_segal(S).passed);
}

TEST_CASE("category round trip through the nerve") {
  for (const FinCat& C :
       {chain_poset(2), indiscrete_groupoid(2), random_category(51, 4),
        random_poset(52, 4)}) {
    FinCat D = category_from_segal(nerve(C, 4));
    Functor F = singleton_chain_functor(C);
    CHECK(validate_functor(C, D, F).passed);
    CHECK(functor_bijective(C, D, F));
  }
}

TEST_CASE("category extraction refuses non-spine-unique input") {
  TruncSSet bad = doubled_filler(chain_poset(2), 3);
  CHECK_THROWS_AS(category_from_segal(bad), SegalFailure);
  try {
    category_from_segal(bad);
  } catch (const SegalFailure& e) {
    CHECK_FALSE(e.report.passed);
    CHECK_FALSE(e.report.witnesses.empty());
  }
}

TEST_CASE("category extraction needs three levels") {
  CHECK_THROWS_AS(category_from_segal(nerve(chain_poset(1), 2)),
                  PreconditionError);
}

TEST_CASE("spine comparison map is a level-wise bijection on nerves") {
  TruncSSet S = nerve(chain_poset(2), 4);
  FinCat C = category_from_segal(S);
  SimplicialMap M = nerve_comparison(S, C);
  CHECK(M.verify().passed);
  for (int n = 0; n <= M.level_count; ++n) {
    CHECK(M.injective(n));
    CHECK(M.image(n).size() == static_cast<size_t>(M.target.size(n)));
  }
}

TEST_CASE("twisted arrow category sizes") {
  FinCat t1 = twisted_arrow_category(chain_poset(1));
  CHECK(t1.objects.size() == 3);
  CHECK(t1.arrows.size() == 5);

  FinCat t2 = twisted_arrow_category(chain_poset(2));
  CHECK(t2.objects.size() == 6);
  CHECK(t2.arrows.size() == 15);

  FinCat tg = twisted_arrow_category(indiscrete_groupoid(2));
  CHECK(tg.objects.size() == 4);
  CHECK(tg.arrows.size() == 16);
}

TEST_CASE("twisted arrows = category of the subdivided nerve") {
  // The subdivision of the nerve, read as a category, is the twisted arrow
  // category on the nose: same arrow triples, objects renamed to singleton
  // chains.
  for (const FinCat& C : {chain_poset(2), indiscrete_groupoid(2)}) {
    FinCat T = twisted_arrow_category(C);
    FinCat D = category_from_segal(edgewise_subdivision(nerve(C, 7)));
    Functor F;
    for (const std::string& g : T.objects) F.on_objects[g] = encode_list({g});
    for (const std::string& a : T.arrows) F.on_arrows[a] = a;
    CHECK(validate_functor(T, D, F).passed);
    CHECK(functor_bijective(T, D, F));
  }
}
