#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gwo/report.hpp"
#include "gwo/term.hpp"

namespace gwo {

/// Operation-name signature of a group with operations: the named binary
/// operations with their opposite pairing, and the named unary operations.
/// The group operations (0, -, +) are implicit in every signature.
struct Signature {
  std::map<std::string, std::string> binary_opposite;
  std::set<std::string> unary;

  bool operator==(const Signature&) const = default;
};

/// A finite group with operations. The carrier is {0,...,size-1}; index 0
/// is the group zero. `add` and the binary tables are row-major
/// (table[a*size+b] is a op b). Every binary operation has a declared
/// opposite in `opposites` (possibly itself); loaders generate the missing
/// opposite table when a document omits it.
struct OpAlgebra {
  int size = 0;
  int zero = 0;
  std::vector<int> add;
  std::vector<int> neg;
  std::map<std::string, std::vector<int>> binary_ops;
  std::map<std::string, std::string> opposites;
  std::map<std::string, std::vector<int>> unary_ops;
  std::vector<IdentityTerm> extra_identities;

  int plus(int a, int b) const { return add[a * size + b]; }
  int minus(int a) const { return neg[a]; }
  int star(const std::string& op, int a, int b) const {
    return binary_ops.at(op)[a * size + b];
  }
  int un(const std::string& op, int a) const { return unary_ops.at(op)[a]; }

  Signature signature() const;

  bool operator==(const OpAlgebra&) const = default;
};

/// A map between algebras of the same signature, given elementwise.
struct AlgebraHom {
  OpAlgebra source;
  OpAlgebra target;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }

  bool operator==(const AlgebraHom&) const = default;
};

/// Action data of an algebra B on an algebra A of the same signature:
/// the conjugation-style dot table and one table per named binary
/// operation. Tables are |B| x |A| row-major (table[b*|A|+a]).
/// Nothing here is assumed valid; is_derived_action decides.
struct DerivedAction {
  OpAlgebra actor;  // B
  OpAlgebra acted;  // A
  std::vector<int> dot;
  std::map<std::string, std::vector<int>> stars;

  int dot_of(int b, int a) const { return dot[b * acted.size + a]; }
  int star_of(const std::string& op, int b, int a) const {
    return stars.at(op)[b * acted.size + a];
  }

  bool operator==(const DerivedAction&) const = default;
};

/// Exhaustive axiom check: group laws, opposite pairing, left
/// distributivity of every binary operation, the unary-operation axioms,
/// and every declared extra identity. Throws Error(MalformedTable) on
/// out-of-range entries; axiom violations land in the report.
ValidationReport validate_algebra(const OpAlgebra& a);

/// True iff f preserves +, every named binary and unary operation.
/// Throws Error(SignatureMismatch) when the signatures differ.
bool is_homomorphism(const AlgebraHom& f);

/// Kernel of f as a sorted index set (preimage of the target zero).
std::vector<int> kernel(const AlgebraHom& f);

/// True iff `members` contains zero and is closed under +, -, every
/// binary and every unary operation of `parent`.
bool is_subobject(const OpAlgebra& parent, const std::vector<int>& members);

/// True iff `members` is a normal subgroup of (parent,+) and absorbs
/// every binary operation on both sides. Unary closure is not required.
bool is_ideal(const OpAlgebra& parent, const std::vector<int>& members);

/// Semidirect product B x A on pairs encoded as b*|A|+a, with
///   (b',a') + (b,a)  = (b'+b, a'.b + a)
///   (b',a') * (b,a)  = (b'*b, b'*a + a'*b + a'*a)
/// where a'.b is the dot action of -b on a' and a'*b the action of b on
/// a' under the opposite operation. Purely a table construction; no
/// validity judgement.
OpAlgebra semidirect_product(const DerivedAction& act);

/// The decision procedure for derived actions: the semidirect product
/// validates as an algebra.
bool is_derived_action(const DerivedAction& act);

/// Exhaustively evaluates the identity on all variable assignments.
/// Throws Error(UnknownOperationName) when the identity references an
/// operation the algebra does not declare.
ValidationReport check_identity(const OpAlgebra& a, const IdentityTerm& id);

int eval_term(const OpAlgebra& a, const IdentityTerm& id, int node,
              const std::vector<int>& assignment);

// Stock constructions, used by tests, the CLI corpus and the bindings.
OpAlgebra cyclic_algebra(int n);                 // Z_n
OpAlgebra klein_four();                          // Z_2 x Z_2
OpAlgebra sym3();                                // symmetric group on 3 letters
OpAlgebra ring_zmod(int n);                      // Z_n with multiplication mod n
OpAlgebra ring_zero(int n);                      // Z_n with zero multiplication
OpAlgebra trivial_like(const OpAlgebra& a);      // one-element algebra, same signature

/// Restriction of `parent` to a subobject, re-indexed with zero first and
/// the remaining members in increasing parent order. `embedding` (when
/// non-null) receives the sub-index -> parent-index map.
OpAlgebra subalgebra(const OpAlgebra& parent, const std::vector<int>& members,
                     std::vector<int>* embedding = nullptr);

}  // namespace gwo
