#pragma once

#include <span>
#include <vector>

#include "plo/chains.hpp"

namespace plo {

struct BumpStep {
  Rat bouncepoint;
  Rat slope_leaving;

  friend bool operator==(const BumpStep&, const BumpStep&) = default;
};

// Initial slope on the orbital, then the bouncepoints of the bump (relative
// to a finite context) each with the slope leaving it.
struct BumpCode {
  Rat initial_slope;
  std::vector<BumpStep> steps;

  friend bool operator==(const BumpCode&, const BumpCode&) = default;
  friend bool operator<(const BumpCode& a, const BumpCode& b);
};

std::string to_string(const BumpCode& code);

// Lengths in ((2/3)^n, (2/3)^(n-1)] fall into class n.
struct LengthClass {
  unsigned index = 1;

  Rat lower() const;  // exclusive
  Rat upper() const;  // inclusive
  bool contains(const Rat& length) const { return lower() < length && length <= upper(); }

  friend bool operator==(const LengthClass&, const LengthClass&) = default;
};

// How each tower element picks the smaller orbital B and the point x in B
// whose preimage bounds its witness interval. `below` counts down from the
// largest element under the current one (clamped to the smallest);
// `position` places x at B.left + position * length(B).
struct WitnessChoice {
  std::size_t below = 0;
  Rat position = ratio(1, 2);
};

// One interval per tower element, pairwise disjoint, each inside its element's
// orbital. Throws Error(PreconditionViolated) if the signatures form a
// transition chain or the position is outside (0,1).
std::vector<Interval> witness_intervals(const Tower& t, const WitnessChoice& choice = {});

LengthClass length_class(const Rat& length);
LengthClass length_class(const Interval& a);

// Checks that pool together with o is a chain under inclusion. Throws
// Error(PreconditionViolated) when a member misses o, two members cross, or a
// member lies in another length class than o.
bool chain_partition_check(std::span<const Interval> pool, const Interval& o);

// Points b with (b)f = (b)g, f != g just right of b, b a breakpoint of f or g.
std::vector<Rat> bouncepoints(const PLMap& f, const PLMap& g);

// As bouncepoints, but b interior to affine components of both maps.
std::vector<Rat> corners(const PLMap& f, const PLMap& g);

// b is an end of some orbital of f g^{-1}.
bool endpoint_witness(const Rat& b, const PLMap& f, const PLMap& g);

// Throws Error(NotAnOrbital) if o is not an orbital of f and
// Error(ContextOrbitalMismatch) if some context map lacks orbital o.
BumpCode bump_code(const PLMap& f, const Interval& o, std::span<const PLMap> context);

struct InjectivityReport {
  std::size_t total = 0;
  std::size_t distinct_codes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;  // distinct maps, equal codes
  std::vector<BumpCode> codes;
};

// Codes every bump against the whole list. Throws
// Error(PreconditionViolated) unless each bump has o as its only orbital.
InjectivityReport check_injectivity(std::span<const PLMap> bumps, const Interval& o);

}  // namespace plo
