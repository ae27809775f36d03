#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gwo/algebra.hpp"
#include "gwo/report.hpp"

namespace gwo {

/// A finite groupoid. Objects and arrows are indices; composition is a
/// sparse pair map defined exactly when tgt(a) = src(b), and a.comp(b)
/// reads "a then b": src(a.b) = src(a), tgt(a.b) = tgt(b).
struct FinGroupoid {
  int num_objects = 0;
  int num_arrows = 0;
  std::vector<int> src;
  std::vector<int> tgt;
  std::vector<int> id_of;
  std::map<std::pair<int, int>, int> comp;

  std::optional<int> compose(int a, int b) const {
    auto it = comp.find({a, b});
    if (it == comp.end()) return std::nullopt;
    return it->second;
  }

  /// Two-sided inverse found by scanning the composition table; -1 when
  /// none exists (only possible in invalid groupoids).
  int inverse(int a) const;

  bool operator==(const FinGroupoid&) const = default;
};

struct GpdMorphism {
  FinGroupoid source;
  FinGroupoid target;
  std::vector<int> arrow_map;
  std::vector<int> object_map;

  bool operator==(const GpdMorphism&) const = default;
};

/// An action of a groupoid on a set: anchor map theta and a sparse
/// phi((x,a)) = xa defined exactly when theta(x) = src(a).
struct GpdAction {
  FinGroupoid gpd;
  int set_size = 0;
  std::vector<int> theta;
  std::map<std::pair<int, int>, int> phi;

  std::optional<int> act(int x, int a) const {
    auto it = phi.find({x, a});
    if (it == phi.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const GpdAction&) const = default;
};

ValidationReport validate_groupoid(const FinGroupoid& g);
ValidationReport validate_morphism(const GpdMorphism& m);

/// Arrows with source x, sorted. Throws Error(UnknownObject).
std::vector<int> star(const FinGroupoid& g, int x);

/// Arrows from x to x, sorted. Throws Error(UnknownObject).
std::vector<int> object_group(const FinGroupoid& g, int x);

/// True iff every hom-set G(x,y) is nonempty.
bool is_transitive(const FinGroupoid& g);

/// True iff every star restriction of p is a bijection. Throws
/// Error(InvalidMorphism) when p fails morphism validation.
bool is_covering(const GpdMorphism& p);

/// True iff source and target are transitive and every hom-set of the
/// source has at most one arrow. Throws Error(NotACovering).
bool is_universal_cover(const GpdMorphism& p);

/// p(source object group at x~), as a sorted subset of the target's
/// object group at p(x~). Throws Error(UnknownObject).
std::vector<int> characteristic_group(const GpdMorphism& p, int x_tilde);

/// Lifts f: (H,z) -> (G,x) through the covering p: (G~,x~) -> (G,x),
/// returning the unique f~ with p o f~ = f. Star bijections are inverted
/// once per object and memoized. Throws Error(NotACovering),
/// Error(NotTransitive) or Error(CharacteristicGroupNotContained).
GpdMorphism lift_morphism(const GpdMorphism& p, const GpdMorphism& f, int z,
                          int x_tilde);

/// The unique r with q o r = p between two transitive pointed coverings
/// of the same pointed target; r is itself a covering, and an isomorphism
/// when the characteristic groups coincide.
GpdMorphism cover_between_covers(const GpdMorphism& p, int p_base,
                                 const GpdMorphism& q, int q_base);

ValidationReport validate_action(const GpdAction& act);

/// The action groupoid G x| X: objects X, arrows the pairs (a,x) with
/// theta(x) = src(a), enumerated x-major, composite (a,x).(b,xa) = (a.b,x).
/// Also returns the projection (a,x) |-> a, a covering morphism.
/// Throws Error(InvalidAction) when the action fails validation.
std::pair<FinGroupoid, GpdMorphism> action_groupoid(const GpdAction& act);

struct CosetCover {
  GpdAction action;        // G acting on the coset set
  FinGroupoid cover;       // the action groupoid
  GpdMorphism projection;  // covering onto G
  int base = 0;            // the coset C itself (always object 0)
  std::vector<std::vector<int>> cosets;  // coset index -> sorted member arrows
};

/// The coset construction: X = {C.a : a in star(x)} with theta(C.a) =
/// tgt(a) and phi(C.a, g) = C.(a.g). Cosets are represented by their
/// least member arrow; the coset C itself is listed first. The projection
/// has characteristic group exactly C at the base. Throws
/// Error(NotTransitive) or Error(NotASubgroup).
CosetCover coset_cover(const FinGroupoid& g, int x, const std::vector<int>& c);

/// Builds the one-object groupoid whose composition table is the group
/// addition of `a`.
FinGroupoid one_object_groupoid(const OpAlgebra& a);

/// Identity arrows only.
FinGroupoid discrete_groupoid(int num_objects);

}  // namespace gwo
