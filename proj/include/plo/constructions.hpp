#pragma once

#include <utility>

#include "plo/chains.hpp"

namespace plo {

// Nodes (0,0), (1/2,1/4), (3/4,1/2), (1,1): one orbital (0,1), slopes 1/2, 1, 2.
PLMap model_bump();

// The model bump rescaled affinely into a, identity outside it.
PLMap one_bump(const Interval& a);

// A PL homeomorphism that is affine on `from` and carries it onto `to`.
// Ends pinned to 0 or 1 must match; throws Error(PreconditionViolated).
PLMap affine_chart(const Interval& from, const Interval& to);

// Bumps on (0,3/4) and (1/4,1).
std::pair<PLMap, PLMap> crossing_pair();

inline constexpr unsigned kMaxTowerDepth = 24;

struct NestedTower {
  GenSet generators;
  Tower tower;
};

// Level 1 is the model bump; each further level is a one-bump map on the
// fundamental domain of the previous level at its orbital's midpoint.
// Throws Error(ResourceLimit) beyond kMaxTowerDepth.
NestedTower nested_tower(unsigned depth);

// Generators {h, f}: f = one_bump(outer) and h a one-bump map on inner,
// shrunk when needed into a fundamental domain of f. Throws
// Error(PreconditionViolated) unless inner is strictly inside outer.
GenSet wreath_generators(const Interval& inner, const Interval& outer);

}  // namespace plo
