#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "plo/chains.hpp"

namespace plo {

// Deterministic source for the generators below. Draws avoid the
// implementation-defined std distributions so a seed yields the same fixtures
// on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n);  // uniform on [0, n)
  bool coin() { return below(2) == 1; }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

// A rational in (0,1) whose denominator is 2^a 3^b with a <= 4, b <= 2.
Rat random_unit_rat(Rng& rng);

// Random element with at most max_nodes nodes; coordinates are dyadic-plus-thirds.
PLMap random_map(Rng& rng, std::size_t max_nodes = 12);

Interval random_interval(Rng& rng);

// Random open interval contained in a (possibly equal to it).
Interval random_subinterval(Rng& rng, const Interval& a);

// A map whose only orbital is `orbital`, with up to `interior_nodes` nodes
// strictly inside it.
PLMap random_bump_on(Rng& rng, const Interval& orbital, std::size_t interior_nodes = 4);

struct FundamentalPair {
  SignedOrbital inner;
  SignedOrbital outer;
};

// inner sits in a fundamental domain of outer at a random point.
FundamentalPair random_fundamental_pair(Rng& rng);

// A tower built level by level inside fundamental domains. Some signatures
// carry an extra bump in a private slot right of the tower, so the
// signatures still form no transition chain.
Tower random_tower(Rng& rng, std::size_t depth);

// `count` pairwise distinct one-orbital maps on `orbital`. Many share an
// initial stretch with an earlier member and diverge at a node, so their
// codes depend on bouncepoints and not only on initial slopes.
std::vector<PLMap> random_bump_family(Rng& rng, const Interval& orbital, std::size_t count);

}  // namespace plo
