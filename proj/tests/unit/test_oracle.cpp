#include <random>

#include "doctest.h"
#include "gwo/error.hpp"
#include "gwo/oracle.hpp"
#include "support/builders.hpp"

using namespace gwo;
using namespace gwo::testing;
namespace oracle = gwo::oracle;

namespace {

/// Applies the witness maps and re-validates isomorphism conditions by
/// direct table lookups.
void check_algebra_witness(const OpAlgebra& a, const OpAlgebra& b,
                           const std::vector<int>& map) {
  std::vector<char> hit(b.size, 0);
  for (int v : map) hit[v] = 1;
  for (char h : hit) CHECK(h == 1);
  CHECK(map[a.zero] == b.zero);
  for (int x = 0; x < a.size; ++x) {
    CHECK(map[a.minus(x)] == b.minus(map[x]));
    for (int y = 0; y < a.size; ++y) {
      CHECK(map[a.plus(x, y)] == b.plus(map[x], map[y]));
      for (const auto& [name, table] : a.binary_ops) {
        (void)table;
        CHECK(map[a.star(name, x, y)] == b.star(name, map[x], map[y]));
      }
    }
  }
}

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

/// Relabels a groupoid along arrow/object permutations.
FinGroupoid permute_groupoid(const FinGroupoid& g,
                             const std::vector<int>& aperm,
                             const std::vector<int>& operm) {
  FinGroupoid out = g;
  for (int a = 0; a < g.num_arrows; ++a) {
    out.src[aperm[a]] = operm[g.src[a]];
    out.tgt[aperm[a]] = operm[g.tgt[a]];
  }
  for (int x = 0; x < g.num_objects; ++x)
    out.id_of[operm[x]] = aperm[g.id_of[x]];
  out.comp.clear();
  for (const auto& [pair, c] : g.comp)
    out.comp[{aperm[pair.first], aperm[pair.second]}] = aperm[c];
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("algebra isomorphism search") {
  SUBCASE("a group is isomorphic to itself") {
    auto witness = oracle::find_algebra_iso(cyclic_algebra(4),
                                            cyclic_algebra(4));
    REQUIRE(witness.found);
    check_algebra_witness(cyclic_algebra(4), cyclic_algebra(4),
                          witness.map("elements"));
  }
  SUBCASE("Z4 and the Klein four-group differ by element orders") {
    auto witness = oracle::find_algebra_iso(cyclic_algebra(4), klein_four());
    CHECK_FALSE(witness.found);
  }
  SUBCASE("the negation semidirect product matches the reference table") {
    OpAlgebra e = semidirect_product(negation_action(3));
    OpAlgebra reference;
    reference.size = 6;
    reference.add = s3_reference_table();
    reference.neg.resize(6);
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y)
        if (reference.add[x * 6 + y] == 0) reference.neg[x] = y;
    REQUIRE(validate_algebra(reference).ok());
    auto witness = oracle::find_algebra_iso(e, reference);
    REQUIRE(witness.found);
    check_algebra_witness(e, reference, witness.map("elements"));
  }
  SUBCASE("rings with different multiplication are distinguished") {
    CHECK_FALSE(oracle::find_algebra_iso(ring_zmod(2), ring_zero(2)).found);
    CHECK(oracle::find_algebra_iso(ring_zero(4), ring_zero(4)).found);
  }
  SUBCASE("the size cap raises the budget error") {
    CHECK_THROWS_AS(
        oracle::find_algebra_iso(cyclic_algebra(13), cyclic_algebra(13)),
        Error);
  }
}

TEST_CASE("groupoid isomorphism search") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  SUBCASE("identity witness exists") {
    auto witness = oracle::find_groupoid_iso(z4, z4);
    REQUIRE(witness.found);
  }
  SUBCASE("a permuted encoding of the coset cover is found") {
    CosetCover two = coset_cover(z4, 0, {0, 2});
    std::vector<int> aperm = {3, 2, 1, 0, 7, 6, 5, 4};
    std::vector<int> operm = {1, 0};
    FinGroupoid permuted = permute_groupoid(two.cover, aperm, operm);
    REQUIRE(validate_groupoid(permuted).ok());
    auto witness = oracle::find_groupoid_iso(two.cover, permuted);
    REQUIRE(witness.found);
    // verify the witness is a real isomorphism
    GpdMorphism m{two.cover, permuted, witness.map("arrows"),
                  witness.map("objects")};
    CHECK(validate_morphism(m).ok());
  }
  SUBCASE("object counts separate discrete from one-object groupoids") {
    auto witness = oracle::find_groupoid_iso(
        discrete_groupoid(2), one_object_groupoid(cyclic_algebra(2)));
    CHECK_FALSE(witness.found);
  }
}

TEST_CASE("internal isomorphism search") {
  InternalGroupoid z4 = one_object_internal(cyclic_algebra(4));
  SUBCASE("self") {
    CHECK(oracle::find_internal_iso(z4, z4).found);
  }
  SUBCASE("relabelled lift") {
    auto [lifted, projection] = lift_internal_structure(z4, {0, 2});
    (void)projection;
    // transport along a zero-fixing arrow permutation that is an
    // algebra automorphism composed with object swap is hard to write by
    // hand; instead compare two independently built copies
    auto [lifted2, projection2] = lift_internal_structure(z4, {0, 2});
    (void)projection2;
    CHECK(oracle::find_internal_iso(lifted, lifted2).found);
  }
  SUBCASE("different component structure is rejected") {
    InternalGroupoid a = xmod_to_internal(zero_xmod(cyclic_algebra(2),
                                                    cyclic_algebra(2)));
    InternalGroupoid b = xmod_to_internal(conjugation_xmod(cyclic_algebra(2)));
    CHECK_FALSE(oracle::find_internal_iso(a, b).found);
  }
}

TEST_CASE("crossed-module isomorphism search") {
  CrossedModule x = zero_xmod(cyclic_algebra(2), cyclic_algebra(2));
  CHECK(oracle::find_xmod_iso(x, x).found);
  CrossedModule y = conjugation_xmod(cyclic_algebra(2));
  CHECK_FALSE(oracle::find_xmod_iso(x, y).found);  // alpha differs
  CrossedModule s3 = conjugation_xmod(sym3());
  auto witness = oracle::find_xmod_iso(s3, s3);
  REQUIRE(witness.found);
  check_algebra_witness(s3.a, s3.a, witness.map("f1"));
}

TEST_CASE("action and cover isomorphism searches") {
  InternalGroupoid z4 = one_object_internal(cyclic_algebra(4));
  auto [lifted, projection] = lift_internal_structure(z4, {0, 2});
  (void)lifted;
  InternalAction act = covering_to_action(projection);
  SUBCASE("action vs itself") {
    CHECK(oracle::find_action_iso(act, act).found);
  }
  SUBCASE("round trip actions match up to relabeling") {
    InternalAction round = covering_to_action(action_to_covering(act));
    CHECK(oracle::find_action_iso(act, round).found);
  }
  SUBCASE("cover vs its regeneration, over the base") {
    InternalMorphism q = action_to_covering(act);
    auto witness = oracle::find_cover_iso_over(projection, q);
    REQUIRE(witness.found);
    // h respects the projections: q(h(a)) = p(a)
    const auto& arrows = witness.map("arrows");
    for (int a = 0; a < projection.source.gpd.num_arrows; ++a)
      CHECK(q.arrow_map[arrows[a]] == projection.arrow_map[a]);
  }
  SUBCASE("covers with different characteristic groups are unrelated") {
    InternalMorphism universal = lift_internal_structure(z4, {0}).second;
    CHECK_FALSE(oracle::find_cover_iso_over(projection, universal).found);
  }
}

TEST_CASE("brute covering check agrees with the main path") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  std::vector<GpdMorphism> morphisms;
  morphisms.push_back(identity_morphism(z4));
  morphisms.push_back(coset_cover(z4, 0, {0}).projection);
  morphisms.push_back(coset_cover(z4, 0, {0, 2}).projection);
  {
    FinGroupoid z2 = one_object_groupoid(cyclic_algebra(2));
    CosetCover tree = coset_cover(z2, 0, {0});
    GpdMorphism collapse{tree.cover, one_object_groupoid(cyclic_algebra(1)),
                         std::vector<int>(tree.cover.num_arrows, 0),
                         std::vector<int>(tree.cover.num_objects, 0)};
    morphisms.push_back(collapse);
  }
  for (const GpdMorphism& p : morphisms)
    CHECK(oracle::brute_check_covering(p) == is_covering(p));
}

TEST_CASE("brute and main covering predicates agree across 200 mutations") {
  FinGroupoid z4 = one_object_groupoid(cyclic_algebra(4));
  std::vector<GpdMorphism> base;
  base.push_back(identity_morphism(z4));
  base.push_back(coset_cover(z4, 0, {0, 2}).projection);
  base.push_back(coset_cover(z4, 0, {0}).projection);

  std::mt19937 rng(20260810);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GpdMorphism m = base[trial % base.size()];
    // one random table-entry corruption across the morphism data
    int which = (int)(rng() % 2);
    if (which == 0 && !m.arrow_map.empty()) {
      int i = (int)(rng() % m.arrow_map.size());
      m.arrow_map[i] = (int)(rng() % m.target.num_arrows);
    } else {
      int i = (int)(rng() % m.object_map.size());
      m.object_map[i] = (int)(rng() % m.target.num_objects);
    }
    if (!validate_morphism(m).ok()) {
      CHECK_THROWS_AS(is_covering(m), Error);
      continue;
    }
    ++compared;
    CHECK(oracle::brute_check_covering(m) == is_covering(m));
  }
  CHECK(compared >= 10);  // identity-map mutations often stay morphisms
}

TEST_SUITE_END();
