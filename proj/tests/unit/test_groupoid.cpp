#include <set>

#include "doctest.h"
#include "gwo/error.hpp"
#include "gwo/groupoid.hpp"
#include "support/builders.hpp"

using namespace gwo;
using namespace gwo::testing;

namespace {

GpdMorphism identity_morphism(const FinGroupoid& g) {
  GpdMorphism m;
  m.source = g;
  m.target = g;
  m.arrow_map.resize(g.num_arrows);
  m.object_map.resize(g.num_objects);
  for (int a = 0; a < g.num_arrows; ++a) m.arrow_map[a] = a;
  for (int x = 0; x < g.num_objects; ++x) m.object_map[x] = x;
  return m;
}

/// Exhaustive search for pointed lifts of f through p: all (object_map,
/// arrow_map) pairs that form a morphism with p o r = f and r(z) = base.
/// Feasible for tiny H only; the uniqueness oracle for lift_morphism.
int count_pointed_lifts(const GpdMorphism& p, const GpdMorphism& f, int z,
                        int x_tilde) {
  const FinGroupoid& h = f.source;
  const FinGroupoid& up = p.source;
  std::vector<int> obj(h.num_objects, 0);
  std::vector<int> arr(h.num_arrows, 0);
  int count = 0;
  auto try_arrows = [&](auto&& self, int a) -> void {
    if (a == h.num_arrows) {
      GpdMorphism r{h, up, arr, obj};
      if (!validate_morphism(r).ok()) return;
      for (int i = 0; i < h.num_arrows; ++i)
        if (p.arrow_map[arr[i]] != f.arrow_map[i]) return;
      ++count;
      return;
    }
    for (arr[a] = 0; arr[a] < up.num_arrows; ++arr[a]) self(self, a + 1);
  };
  auto try_objects = [&](auto&& self, int x) -> void {
    if (x == h.num_objects) {
      try_arrows(try_arrows, 0);
      return;
    }
    for (obj[x] = 0; obj[x] < up.num_objects; ++obj[x]) {
      if (x == z && obj[x] != x_tilde) continue;
      self(self, x + 1);
    }
  };
  try_objects(try_objects, 0);
  return count;
}

}  // namespace

TEST_SUITE_BEGIN("groupoid");

TEST_CASE("discrete and one-object groupoids validate") {
  CHECK(validate_groupoid(discrete_groupoid(3)).ok());
  CHECK(validate_groupoid(one_object_groupoid(cyclic_algebra(4))).ok());
  CHECK(validate_groupoid(one_object_groupoid(sym3())).ok());
}

TEST_CASE("a non-associative composition is located by the validator") {
  FinGroupoid g = one_object_groupoid(cyclic_algebra(4));
  g.comp[{1, 1}] = 3;  // 1.1 := 3 instead of 2
  ValidationReport report = validate_groupoid(g);
  REQUIRE_FALSE(report.ok());
  // scan for a violated triple independently
  bool found = false;
  for (int a = 0; a < 4 && !found; ++a)
    for (int b = 0; b < 4 && !found; ++b)
      for (int c = 0; c < 4 && !found; ++c) {
        auto ab = g.compose(a, b);
        auto bc = g.compose(b, c);
        if (ab && bc && *g.compose(*ab, c) != *g.compose(a, *bc)) found = true;
      }
  CHECK(found);
}

TEST_CASE("comp entries on non-composable pairs are malformed") {
  FinGroupoid g = discrete_groupoid(2);
  g.comp[{0, 1}] = 0;  // tgt(0)=0 != src(1)=1
  CHECK_THROWS_AS(validate_groupoid(g), Error);
}

TEST_CASE("star, object group, transitivity") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  CHECK(star(z4, 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(object_group(z4, 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(is_transitive(z4));
  CHECK_FALSE(is_transitive(discrete_groupoid(2)));
  CHECK_THROWS_AS(star(z4, 1), Error);

  // the coset action groupoid on Z4/{0,2} is transitive: every hom-set
  // is inhabited
  CosetCover cover = coset_cover(z4, 0, {0, 2});
  for (int x = 0; x < cover.cover.num_objects; ++x)
    for (int y = 0; y < cover.cover.num_objects; ++y) {
      bool found = false;
      for (int a = 0; a < cover.cover.num_arrows; ++a)
        if (cover.cover.src[a] == x && cover.cover.tgt[a] == y) found = true;
      CHECK(found);
    }
  CHECK(is_transitive(cover.cover));
}

TEST_CASE("inverse identities hold in valid groupoids") {
  for (const FinGroupoid& g :
       {one_object_groupoid(sym3()),
        coset_cover(one_object_groupoid(cyclic_algebra(4)), 0, {0, 2}).cover}) {
    REQUIRE(validate_groupoid(g).ok());
    for (int a = 0; a < g.num_arrows; ++a) {
      int inv = g.inverse(a);
      REQUIRE(inv >= 0);
      CHECK(g.src[inv] == g.tgt[a]);
      CHECK(g.tgt[inv] == g.src[a]);
      CHECK(*g.compose(a, inv) == g.id_of[g.src[a]]);
      CHECK(*g.compose(inv, a) == g.id_of[g.tgt[a]]);
    }
  }
}

TEST_CASE("covering detection") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  SUBCASE("identity is a covering") {
    CHECK(is_covering(identity_morphism(z4)));
  }
  SUBCASE("coset projection is a covering; star sizes pair up") {
    CosetCover cover = coset_cover(z4, 0, {0, 2});
    // both stars have 4 arrows; the pairing is a bijection
    for (int x = 0; x < cover.cover.num_objects; ++x) {
      std::set<int> image;
      for (int a = 0; a < cover.cover.num_arrows; ++a)
        if (cover.cover.src[a] == x) image.insert(cover.projection.arrow_map[a]);
      CHECK(image.size() == 4);
    }
    CHECK(is_covering(cover.projection));
  }
  SUBCASE("collapsing a two-object transitive groupoid is not a covering") {
    FinGroupoid z2 = one_object_groupoid(cyclic_algebra(2));
    CosetCover tree = coset_cover(z2, 0, {0});  // 2 objects, 4 arrows
    FinGroupoid point = one_object_groupoid(cyclic_algebra(1));
    GpdMorphism collapse{tree.cover, point,
                         std::vector<int>(tree.cover.num_arrows, 0),
                         std::vector<int>(tree.cover.num_objects, 0)};
    REQUIRE(validate_morphism(collapse).ok());
    CHECK_FALSE(is_covering(collapse));
  }
  SUBCASE("non-morphisms are rejected") {
    GpdMorphism bad = identity_morphism(z4);
    bad.arrow_map = {0, 2, 1, 3};  // not composition-preserving
    CHECK_THROWS_AS(is_covering(bad), Error);
  }
}

TEST_CASE("universal covers have singleton hom-sets") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  CHECK(is_universal_cover(coset_cover(z4, 0, {0}).projection));
  CHECK_FALSE(is_universal_cover(identity_morphism(z4)));
  CHECK_FALSE(is_universal_cover(coset_cover(z4, 0, {0, 2}).projection));
}

TEST_CASE("characteristic groups of the coset covers") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  CHECK(characteristic_group(identity_morphism(z4), 0) ==
        std::vector<int>{0, 1, 2, 3});
  CosetCover two = coset_cover(z4, 0, {0, 2});
  CHECK(characteristic_group(two.projection, two.base) ==
        std::vector<int>{0, 2});
  CosetCover universal = coset_cover(z4, 0, {0});
  CHECK(characteristic_group(universal.projection, universal.base) ==
        std::vector<int>{0});
}

TEST_CASE("coset covers over the full object group are isomorphisms") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  CosetCover full = coset_cover(z4, 0, {0, 1, 2, 3});
  CHECK(full.cover.num_objects == 1);
  CHECK(full.cover.num_arrows == 4);
  CHECK(is_covering(full.projection));
  std::set<int> image(full.projection.arrow_map.begin(),
                      full.projection.arrow_map.end());
  CHECK(image.size() == 4);
}

TEST_CASE("coset cover rejects bad inputs") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  CHECK_THROWS_AS(coset_cover(z4, 0, {0, 1, 2}), Error);   // not closed
  CHECK_THROWS_AS(coset_cover(z4, 0, {1, 2}), Error);      // no identity
  CHECK_THROWS_AS(coset_cover(discrete_groupoid(2), 0, {0}), Error);
}

TEST_CASE("morphism lifting through coverings") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  CosetCover two = coset_cover(z4, 0, {0, 2});

  SUBCASE("lifting the covering through itself gives the identity") {
    GpdMorphism lift = lift_morphism(two.projection, two.projection, two.base,
                                     two.base);
    CHECK(lift.arrow_map == identity_morphism(two.cover).arrow_map);
    CHECK(lift.object_map == identity_morphism(two.cover).object_map);
  }

  SUBCASE("a subgroupoid with contained characteristic group lifts uniquely") {
    // H = one-object {0,2} subgroup of Z4, included into Z4
    FinGroupoid h = one_object_groupoid(cyclic_algebra(2));
    GpdMorphism include{h, z4, {0, 2}, {0}};
    REQUIRE(validate_morphism(include).ok());
    GpdMorphism lift = lift_morphism(two.projection, include, 0, two.base);
    // p o lift = include, arrow by arrow
    for (int a = 0; a < h.num_arrows; ++a)
      CHECK(two.projection.arrow_map[lift.arrow_map[a]] ==
            include.arrow_map[a]);
    CHECK(validate_morphism(lift).ok());
    // the image stays in the object group over the base
    for (int a = 0; a < h.num_arrows; ++a) {
      CHECK(two.cover.src[lift.arrow_map[a]] == two.base);
      CHECK(two.cover.tgt[lift.arrow_map[a]] == two.base);
    }
    // exhaustive enumeration confirms uniqueness
    CHECK(count_pointed_lifts(two.projection, include, 0, two.base) == 1);
    // construction is deterministic: a second run agrees
    GpdMorphism again = lift_morphism(two.projection, include, 0, two.base);
    CHECK(again == lift);
  }

  SUBCASE("containment failure raises the characteristic-group error") {
    CosetCover universal = coset_cover(z4, 0, {0});
    GpdMorphism self = identity_morphism(z4);
    CHECK_THROWS_WITH_AS(
        lift_morphism(universal.projection, self, 0, universal.base),
        doctest::Contains("CharacteristicGroupNotContained"), Error);
  }
}

TEST_CASE("covers of covers") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  CosetCover universal = coset_cover(z4, 0, {0});
  CosetCover two = coset_cover(z4, 0, {0, 2});

  SUBCASE("equal coverings yield the identity") {
    GpdMorphism r = cover_between_covers(two.projection, two.base,
                                         two.projection, two.base);
    CHECK(r.arrow_map == identity_morphism(two.cover).arrow_map);
  }

  SUBCASE("the universal cover covers the two-coset cover") {
    GpdMorphism r = cover_between_covers(universal.projection, universal.base,
                                         two.projection, two.base);
    CHECK(is_covering(r));
    // q o r = p arrow by arrow
    for (int a = 0; a < universal.cover.num_arrows; ++a)
      CHECK(two.projection.arrow_map[r.arrow_map[a]] ==
            universal.projection.arrow_map[a]);
    // two-to-one on objects: 4 objects over 2
    std::vector<int> fiber(two.cover.num_objects, 0);
    for (int x = 0; x < universal.cover.num_objects; ++x)
      fiber[r.object_map[x]]++;
    CHECK(fiber == std::vector<int>{2, 2});
  }

  SUBCASE("containment failure is an error") {
    CHECK_THROWS_AS(cover_between_covers(two.projection, two.base,
                                         universal.projection, universal.base),
                    Error);
  }
}

TEST_CASE("action validation") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  SUBCASE("canonical action on the object set") {
    GpdAction act{z4, 1, {0}, {}};
    for (int a = 0; a < 4; ++a) act.phi[{0, a}] = 0;
    CHECK(validate_action(act).ok());
  }
  SUBCASE("coset action of the two-coset cover") {
    CosetCover two = coset_cover(z4, 0, {0, 2});
    CHECK(two.action.set_size == 2);
    CHECK(validate_action(two.action).ok());
  }
  SUBCASE("corrupting one phi entry violates the target axiom") {
    CosetCover two = coset_cover(z4, 0, {0, 2});
    GpdAction bad = two.action;
    auto it = bad.phi.find({0, 1});
    REQUIRE(it != bad.phi.end());
    it->second = 1 - it->second;
    ValidationReport report = validate_action(bad);
    CHECK_FALSE(report.ok());
  }
}

TEST_CASE("action groupoids and their projections") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  SUBCASE("the canonical one-point action reproduces the groupoid") {
    GpdAction act{z4, 1, {0}, {}};
    for (int a = 0; a < 4; ++a) act.phi[{0, a}] = 0;
    auto [product, projection] = action_groupoid(act);
    CHECK(product == z4);
    CHECK(projection.arrow_map == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("two cosets give 8 arrows, projection two-to-one") {
    CosetCover two = coset_cover(z4, 0, {0, 2});
    CHECK(two.cover.num_objects == 2);
    CHECK(two.cover.num_arrows == 8);  // 2 objects x |star| = 4
    std::vector<int> preimages(4, 0);
    for (int a : two.projection.arrow_map) preimages[a]++;
    CHECK(preimages == std::vector<int>{2, 2, 2, 2});
    CHECK(validate_groupoid(two.cover).ok());
  }
  SUBCASE("four cosets give 16 arrows") {
    CosetCover universal = coset_cover(z4, 0, {0});
    CHECK(universal.cover.num_objects == 4);
    CHECK(universal.cover.num_arrows == 16);
    CHECK(validate_groupoid(universal.cover).ok());
  }
}

TEST_CASE("coset projections are coverings for every subgroup") {
  // every subgroup of every small test group
  for (const OpAlgebra& g : {cyclic_algebra(4), cyclic_algebra(6), klein_four(),
                             sym3()}) {
    FinGroupoid base = one_object_groupoid(g);
    std::vector<int> all = object_group(base, 0);
    for (size_t mask = 1; mask < (size_t(1) << all.size()); ++mask) {
      std::vector<int> subset;
      for (size_t i = 0; i < all.size(); ++i)
        if (mask & (size_t(1) << i)) subset.push_back(all[i]);
      // keep genuine subgroups only
      bool subgroup = false;
      try {
        CosetCover cover = coset_cover(base, 0, subset);
        subgroup = true;
        CHECK(is_covering(cover.projection));
        CHECK(characteristic_group(cover.projection, cover.base) == subset);
      } catch (const Error&) {
      }
      if (subset.size() == 1 && subset[0] == 0) CHECK(subgroup);
    }
  }
}

TEST_SUITE_END();
