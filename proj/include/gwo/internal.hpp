#pragma once

#include <utility>
#include <vector>

#include "gwo/algebra.hpp"
#include "gwo/groupoid.hpp"

namespace gwo {

/// A groupoid internal to the category of groups with operations: arrow
/// and object sets carry algebras of one signature and all structure maps
/// are algebra homomorphisms, which forces the interchange law and the
/// inverse formula a^-1 = eps d1(a) - a + eps d0(a).
struct InternalGroupoid {
  FinGroupoid gpd;
  OpAlgebra arrow_alg;
  OpAlgebra object_alg;

  bool operator==(const InternalGroupoid&) const = default;
};

struct InternalMorphism {
  InternalGroupoid source;
  InternalGroupoid target;
  std::vector<int> arrow_map;
  std::vector<int> object_map;

  GpdMorphism underlying() const {
    return {source.gpd, target.gpd, arrow_map, object_map};
  }

  bool operator==(const InternalMorphism&) const = default;
};

/// An internal groupoid acting on a group with operations X: theta is an
/// algebra homomorphism and phi is compatible with every operation.
struct InternalAction {
  InternalGroupoid gpd;
  OpAlgebra set_alg;
  std::vector<int> theta;
  std::map<std::pair<int, int>, int> phi;

  GpdAction underlying() const {
    return {gpd.gpd, set_alg.size, theta, phi};
  }

  std::optional<int> act(int x, int a) const {
    auto it = phi.find({x, a});
    if (it == phi.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const InternalAction&) const = default;
};

/// Component validation plus the homomorphism conditions on d0, d1, eps,
/// the interchange law for + and every named binary operation, the unary
/// compatibility of composition, and the inverse formula. Component
/// failures are folded into the report with prefixes and suppress the
/// internal-specific checks.
ValidationReport validate_internal(const InternalGroupoid& g);

ValidationReport validate_internal_morphism(const InternalMorphism& m);

/// Ker d0 = St 0 as a sorted arrow index set. An ideal of the arrow
/// algebra. Throws Error(ComponentInvalid) when g fails validation.
std::vector<int> ker_d0_component(const InternalGroupoid& g);

/// The full internal subgroupoid on the orbit of the zero object (all
/// arrows with both endpoints reachable from 0). `arrow_members` /
/// `object_members` receive the selected parent indices when non-null.
InternalGroupoid zero_component(const InternalGroupoid& g,
                                std::vector<int>* arrow_members = nullptr,
                                std::vector<int>* object_members = nullptr);

/// Underlying action axioms, theta a homomorphism, phi compatible with +
/// and every named binary operation ((x*y)(a*b) = (xa)*(yb)) and with
/// every named unary operation.
ValidationReport validate_internal_action(const InternalAction& act);

/// The coset algebra of Thm-style lifting: carrier the cosets C.a of the
/// star at 0, with (C.a) * (C.b) = C.(a*b) and w(C.a) = C.w(a).
/// Representative independence is verified exhaustively during
/// construction. C must be a subobject of the object group at 0 inside
/// the arrow algebra. Throws Error(NotASubobject), Error(NotTransitive).
OpAlgebra lifted_coset_algebra(const InternalGroupoid& g,
                               const std::vector<int>& c,
                               CosetCover* out_cover = nullptr);

/// The action groupoid with componentwise operations on arrow pairs,
/// plus the projection, an internal covering morphism.
/// Throws Error(InvalidAction).
std::pair<InternalGroupoid, InternalMorphism> internal_action_groupoid(
    const InternalAction& act);

/// Lifts the internal structure of g to the cover classified by C:
/// the coset algebra followed by the internal action groupoid. The
/// returned covering has characteristic group C and base object 0 (the
/// coset C). Throws Error(NotASubobject), Error(NotTransitive).
std::pair<InternalGroupoid, InternalMorphism> lift_internal_structure(
    const InternalGroupoid& g, const std::vector<int>& c);

/// True iff the underlying groupoid morphism is a covering. Throws
/// Error(InvalidMorphism) when m is not a valid internal morphism.
bool is_internal_covering(const InternalMorphism& m);

/// Whether the restriction of m to the stars at 0 is an isomorphism of
/// algebras (bijective and operation-preserving on Ker d0). Reported as
/// a flag, never a failure: expected true for every covering.
bool star_zero_restriction_is_iso(const InternalMorphism& m);

/// Phi: a covering p: G~ -> G yields the action of G on the object
/// algebra of G~ by x.a = target of the unique star lift of a at x.
/// Throws Error(NotACovering).
InternalAction covering_to_action(const InternalMorphism& p);

/// Gamma: the projection of the internal action groupoid.
InternalMorphism action_to_covering(const InternalAction& act);

/// Checks the action/cover equivalence on a battery over one internal
/// groupoid: Phi(Gamma(act)) must be isomorphic to act as an action and
/// Gamma(Phi(p)) to p as a cover of g, with witnesses found by oracle
/// search. Failures become report entries, never exceptions.
ValidationReport check_act_cov_equivalence(
    const InternalGroupoid& g, const std::vector<InternalAction>& actions,
    const std::vector<InternalMorphism>& covers);

/// One-object internal groupoid on an abelian algebra (composition = +).
InternalGroupoid one_object_internal(const OpAlgebra& a);

/// Identity arrows only; arrow algebra transported along eps.
InternalGroupoid discrete_internal(const OpAlgebra& objects);

/// The canonical action of g on its own object algebra (theta = id,
/// xa = tgt(a)).
InternalAction canonical_self_action(const InternalGroupoid& g);

/// All subobjects of the object group at 0 inside the arrow algebra,
/// sorted by size then lexicographically.
std::vector<std::vector<int>> subobjects_of_object_group(
    const InternalGroupoid& g);

}  // namespace gwo
