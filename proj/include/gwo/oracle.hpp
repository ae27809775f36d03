#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gwo/internal.hpp"
#include "gwo/xmod.hpp"

namespace gwo {
namespace oracle {

/// Result of a backtracking isomorphism search: the witness maps when
/// one exists, otherwise an explicit miss with the number of search
/// nodes that were exhausted.
struct IsoWitness {
  bool found = false;
  std::map<std::string, std::vector<int>> maps;
  std::uint64_t nodes = 0;

  const std::vector<int>& map(const std::string& name) const {
    return maps.at(name);
  }
};

inline constexpr int kAlgebraSizeCap = 12;
inline constexpr int kArrowCap = 16;
inline constexpr int kXModSizeCap = 8;

/// Complete backtracking over zero-preserving bijections, pruned by
/// additive element order and incremental table consistency. Complete up
/// to kAlgebraSizeCap; beyond it throws Error(SearchBudgetExceeded).
IsoWitness find_algebra_iso(const OpAlgebra& a, const OpAlgebra& b);

/// Witness maps: "objects", "arrows".
IsoWitness find_groupoid_iso(const FinGroupoid& g, const FinGroupoid& h);

/// Witness maps: "arrows", "objects"; respects both algebras and the
/// groupoid structure.
IsoWitness find_internal_iso(const InternalGroupoid& g,
                             const InternalGroupoid& h);

/// Witness maps: "f1", "f2".
IsoWitness find_xmod_iso(const CrossedModule& x, const CrossedModule& y);

/// Isomorphism of actions of one internal groupoid: a bijective algebra
/// map f with theta = theta' o f and f(xa) = f(x)a. Witness map: "set".
IsoWitness find_action_iso(const InternalAction& a, const InternalAction& b);

/// Isomorphism h of internal covers of one base with q o h = p.
/// Witness maps: "arrows", "objects".
IsoWitness find_cover_iso_over(const InternalMorphism& p,
                               const InternalMorphism& q);

/// Independent covering check: stars recomputed from the raw arrow lists
/// and bijectivity tested by explicit pairing. Shares no code with
/// is_covering.
bool brute_check_covering(const GpdMorphism& p);

}  // namespace oracle
}  // namespace gwo
