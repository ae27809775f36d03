#include <set>

#include "doctest.h"
#include "gwo/algebra.hpp"
#include "gwo/error.hpp"
#include "support/builders.hpp"

using namespace gwo;
using namespace gwo::testing;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("cyclic groups validate") {
  for (int n : {1, 2, 3, 4, 6}) {
    ValidationReport report = validate_algebra(cyclic_algebra(n));
    CHECK(report.ok());
  }
  CHECK(validate_algebra(klein_four()).ok());
  CHECK(validate_algebra(sym3()).ok());
}

TEST_CASE("mod-4 ring validates; distributivity holds on all 64 triples") {
  OpAlgebra r4 = ring_zmod(4);
  // independent scan over the raw table
  const auto& mul = r4.binary_ops.at("*");
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        CHECK(mul[a * 4 + r4.plus(b, c)] ==
              r4.plus(mul[a * 4 + b], mul[a * 4 + c]));
  CHECK(validate_algebra(r4).ok());
}

TEST_CASE("corrupting one multiplication entry is caught with a witness") {
  OpAlgebra r4 = ring_zmod(4);
  r4.binary_ops.at("*")[1 * 4 + 1] = 0;  // 1*1 := 0
  ValidationReport report = validate_algebra(r4);
  REQUIRE_FALSE(report.ok());

  // brute-force scan locates a distributivity violation independently
  bool found = false;
  const auto& mul = r4.binary_ops.at("*");
  for (int a = 0; a < 4 && !found; ++a)
    for (int b = 0; b < 4 && !found; ++b)
      for (int c = 0; c < 4 && !found; ++c)
        if (mul[a * 4 + r4.plus(b, c)] !=
            r4.plus(mul[a * 4 + b], mul[a * 4 + c]))
          found = true;
  CHECK(found);
  CHECK_FALSE(report.check_passed("algebra.left_distrib"));
  // every reported counterexample reproduces against the tables
  for (const auto& f : report.failures()) {
    if (f.check != "algebra.left_distrib") continue;
    int lhs = mul[f.tuple[0] * 4 + r4.plus(f.tuple[1], f.tuple[2])];
    int rhs = r4.plus(mul[f.tuple[0] * 4 + f.tuple[1]],
                      mul[f.tuple[0] * 4 + f.tuple[2]]);
    CHECK(lhs == f.lhs);
    CHECK(rhs == f.rhs);
    CHECK(lhs != rhs);
  }
}

TEST_CASE("malformed tables are rejected before axiom checking") {
  OpAlgebra bad = cyclic_algebra(3);
  bad.add[4] = 7;
  CHECK_THROWS_AS(validate_algebra(bad), Error);
  OpAlgebra short_neg = cyclic_algebra(3);
  short_neg.neg.pop_back();
  CHECK_THROWS_AS(validate_algebra(short_neg), Error);
}

TEST_CASE("homomorphism checks") {
  OpAlgebra r4 = ring_zmod(4);
  SUBCASE("identity map") {
    CHECK(is_homomorphism({r4, r4, {0, 1, 2, 3}}));
  }
  SUBCASE("doubling on Z4") {
    OpAlgebra z4 = cyclic_algebra(4);
    // oracle: all 16 pairs by hand
    std::vector<int> dbl = {0, 2, 0, 2};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        CHECK(dbl[z4.plus(a, b)] == z4.plus(dbl[a], dbl[b]));
    CHECK(is_homomorphism({z4, z4, dbl}));
  }
  SUBCASE("reduction mod 2 as a ring map") {
    CHECK(is_homomorphism({r4, ring_zmod(2), {0, 1, 0, 1}}));
  }
  SUBCASE("non-homomorphism") {
    CHECK_FALSE(is_homomorphism({r4, r4, {0, 1, 1, 3}}));
  }
  SUBCASE("signature mismatch throws") {
    CHECK_THROWS_AS(is_homomorphism({r4, cyclic_algebra(4), {0, 1, 2, 3}}),
                    Error);
  }
}

TEST_CASE("homomorphic images preserve zero and negation") {
  std::vector<AlgebraHom> homs = {
      {cyclic_algebra(4), cyclic_algebra(4), {0, 2, 0, 2}},
      {ring_zmod(4), ring_zmod(2), {0, 1, 0, 1}},
      {cyclic_algebra(6), cyclic_algebra(3), {0, 1, 2, 0, 1, 2}},
  };
  for (const auto& f : homs) {
    REQUIRE(is_homomorphism(f));
    CHECK(f.map[f.source.zero] == f.target.zero);
    for (int a = 0; a < f.source.size; ++a)
      CHECK(f.map[f.source.minus(a)] == f.target.minus(f.map[a]));
  }
}

TEST_CASE("kernels are ideals") {
  std::vector<AlgebraHom> homs = {
      {ring_zmod(4), ring_zmod(2), {0, 1, 0, 1}},
      {cyclic_algebra(4), cyclic_algebra(4), {0, 2, 0, 2}},
      {cyclic_algebra(6), cyclic_algebra(2), {0, 1, 0, 1, 0, 1}},
  };
  for (const auto& f : homs) {
    REQUIRE(is_homomorphism(f));
    CHECK(is_ideal(f.source, kernel(f)));
  }
}

TEST_CASE("subobject predicate") {
  OpAlgebra r4 = ring_zmod(4);
  CHECK(is_subobject(r4, {0}));
  CHECK(is_subobject(r4, {0, 2}));  // 2+2=0, 2*2=0
  CHECK_FALSE(is_subobject(cyclic_algebra(4), {0, 1}));  // 1+1=2 missing
  CHECK_FALSE(is_subobject(r4, {1, 2}));                 // no zero
}

TEST_CASE("ideal predicate") {
  OpAlgebra r4 = ring_zmod(4);
  SUBCASE("doubles absorb multiplication") {
    // oracle: 2*x and x*2 stay in {0,2} for every x
    std::set<int> members{0, 2};
    for (int x = 0; x < 4; ++x) {
      CHECK(members.count(r4.star("*", 2, x)));
      CHECK(members.count(r4.star("*", x, 2)));
    }
    CHECK(is_ideal(r4, {0, 2}));
  }
  SUBCASE("whole carrier") {
    CHECK(is_ideal(r4, {0, 1, 2, 3}));
    CHECK(is_ideal(cyclic_algebra(5), {0, 1, 2, 3, 4}));
  }
  SUBCASE("zero multiplication absorbs everything") {
    CHECK(is_ideal(ring_zero(4), {0, 2}));
  }
  SUBCASE("non-normal or non-absorbing subsets fail") {
    CHECK_FALSE(is_ideal(r4, {0, 1}));
    CHECK_FALSE(is_ideal(sym3(), {0, 1}));  // reflection subgroup not normal
  }
}

TEST_CASE("semidirect product of the negation action is nonabelian of order 6") {
  OpAlgebra e = semidirect_product(negation_action(3));
  REQUIRE(e.size == 6);
  // (1,1)+(1,0) != (1,0)+(1,1), scanning the constructed table
  int p = 1 * 3 + 1, q = 1 * 3 + 0;
  CHECK(e.add[p * 6 + q] != e.add[q * 6 + p]);
  CHECK(validate_algebra(e).ok());
}

TEST_CASE("semidirect product with the trivial action is the direct product") {
  OpAlgebra e = semidirect_product(
      trivial_action(cyclic_algebra(2), cyclic_algebra(2)));
  REQUIRE(e.size == 4);
  for (int b1 = 0; b1 < 2; ++b1)
    for (int a1 = 0; a1 < 2; ++a1)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int a2 = 0; a2 < 2; ++a2)
          CHECK(e.add[(b1 * 2 + a1) * 4 + (b2 * 2 + a2)] ==
                ((b1 + b2) % 2) * 2 + (a1 + a2) % 2);
  CHECK(validate_algebra(e).ok());
}

TEST_CASE("ring semidirect with zero star actions has zero multiplication") {
  OpAlgebra r2 = ring_zero(2);
  OpAlgebra e = semidirect_product(trivial_action(r2, r2));
  REQUIRE(e.size == 4);
  for (int v : e.binary_ops.at("*")) CHECK(v == 0);
  CHECK(validate_algebra(e).ok());
}

TEST_CASE("derived-action decision procedure") {
  CHECK(is_derived_action(negation_action(3)));
  CHECK(is_derived_action(trivial_action(cyclic_algebra(2), cyclic_algebra(3))));
  CHECK(is_derived_action(trivial_action(ring_zero(2), ring_zero(4))));
  // nonabelian actor: conjugation of S3 on itself
  CHECK(is_derived_action(conjugation_action(sym3())));

  // the shift is not an action; associativity of + fails downstream
  DerivedAction shift = shift_pseudo_action();
  CHECK_FALSE(is_derived_action(shift));
  ValidationReport report = validate_algebra(semidirect_product(shift));
  bool assoc_or_identity_failure = false;
  for (const auto& f : report.failures())
    if (f.check == "algebra.add_assoc" || f.check == "algebra.zero_identity")
      assoc_or_identity_failure = true;
  CHECK(assoc_or_identity_failure);
}

TEST_CASE("identity checking") {
  SUBCASE("addition commutes on Z4") {
    CHECK(check_identity(cyclic_algebra(4), parse_identity("x+y = y+x")).ok());
  }
  SUBCASE("multiplication associates on the mod-4 ring") {
    CHECK(check_identity(ring_zmod(4), parse_identity("x*(y*z) = (x*y)*z"))
              .ok());
  }
  SUBCASE("renamed addition of the order-6 semidirect group is noncommutative") {
    OpAlgebra e = semidirect_product(negation_action(3));
    OpAlgebra renamed = e;
    renamed.binary_ops["*"] = e.add;
    std::vector<int> transpose(36);
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) transpose[x * 6 + y] = e.add[y * 6 + x];
    renamed.binary_ops["*~"] = std::move(transpose);
    renamed.opposites["*"] = "*~";
    renamed.opposites["*~"] = "*";
    ValidationReport report =
        check_identity(renamed, parse_identity("x*y = y*x"));
    REQUIRE_FALSE(report.ok());
    const CheckFailure& f = report.failures().front();
    // the counterexample assignment really separates the two sides
    CHECK(renamed.star("*", f.tuple[0], f.tuple[1]) !=
          renamed.star("*", f.tuple[1], f.tuple[0]));
  }
  SUBCASE("unknown operation names are rejected") {
    CHECK_THROWS_AS(
        check_identity(cyclic_algebra(4), parse_identity("x*y = y*x")), Error);
  }
}

TEST_CASE("declared extra identities are enforced by the validator") {
  OpAlgebra z4 = cyclic_algebra(4);
  z4.extra_identities.push_back(parse_identity("x+x = 0"));
  ValidationReport report = validate_algebra(z4);
  CHECK_FALSE(report.ok());  // 1+1 = 2
  OpAlgebra klein = klein_four();
  klein.extra_identities.push_back(parse_identity("x+x = 0"));
  CHECK(validate_algebra(klein).ok());
}

TEST_CASE("subalgebra restriction reindexes with zero first") {
  OpAlgebra r4 = ring_zmod(4);
  std::vector<int> embedding;
  OpAlgebra sub = subalgebra(r4, {0, 2}, &embedding);
  CHECK(embedding == std::vector<int>{0, 2});
  CHECK(sub.size == 2);
  CHECK(sub.plus(1, 1) == 0);       // 2+2 = 0
  CHECK(sub.star("*", 1, 1) == 0);  // 2*2 = 0
  CHECK(validate_algebra(sub).ok());
  CHECK_THROWS_AS(subalgebra(r4, {0, 1}, nullptr), Error);
}

TEST_SUITE_END();
