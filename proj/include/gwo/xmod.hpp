#pragma once

#include "gwo/algebra.hpp"
#include "gwo/internal.hpp"

namespace gwo {

/// A crossed module: alpha: A -> B with a derived action of B on A
/// satisfying CM1-CM4.
struct CrossedModule {
  OpAlgebra a;
  OpAlgebra b;
  std::vector<int> alpha;
  DerivedAction action;  // B acting on A

  bool operator==(const CrossedModule&) const = default;
};

struct XModMorphism {
  CrossedModule source;
  CrossedModule target;
  std::vector<int> f1;  // A -> A'
  std::vector<int> f2;  // B -> B'

  bool operator==(const XModMorphism&) const = default;
};

/// Component validity, alpha a homomorphism, the action derived, and
/// CM1-CM4 exhaustively:
///   CM1  alpha(b.a)  = b + alpha(a) - b
///   CM2  alpha(a).a' = a + a' - a
///   CM3  alpha(a)*a' = a * a'
///   CM4  alpha(b*a)  = b * alpha(a)   and   alpha(a*b) = alpha(a) * b
ValidationReport validate_xmod(const CrossedModule& x);

/// True iff f2 alpha = alpha' f1, f1(b.a) = f2(b).f1(a) and
/// f1(b*a) = f2(b)*f1(a) for every named binary operation.
bool is_xmod_morphism(const XModMorphism& m);

/// True iff m is a morphism and f1 is a bijective homomorphism.
bool is_xmod_cover(const XModMorphism& m);

/// The crossed module of an internal groupoid: A = Ker d0 with its
/// algebra structure, B the object algebra, alpha = d1 restricted, and
/// the eps-conjugation action b.a = eps(b) + a - eps(b),
/// b*a = eps(b)*a. Throws Error(ComponentInvalid).
CrossedModule internal_to_xmod(const InternalGroupoid& g);

/// The internal groupoid of a crossed module: arrows the semidirect
/// product B x A, objects B, d0(b,a) = b, d1(b,a) = b + alpha(a),
/// eps(b) = (b,0) and (b,a).(b+alpha(a),a') = (b, a+a').
/// Throws Error(ComponentInvalid).
InternalGroupoid xmod_to_internal(const CrossedModule& x);

/// Restricts an internal morphism to crossed modules: f1 = p on Ker d0,
/// f2 = p on objects. p is an internal covering iff the result is an
/// xmod cover. Throws Error(ComponentInvalid), Error(InvalidMorphism).
XModMorphism cover_correspondence(const InternalMorphism& p);

}  // namespace gwo
