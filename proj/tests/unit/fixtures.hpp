#pragma once

#include <plo/constructions.hpp>
#include <plo/pl_map.hpp>
#include <plo/rational.hpp>

#include <initializer_list>
#include <utility>
#include <vector>

namespace plo::test {

inline PLMap nodes(std::initializer_list<std::pair<Rat, Rat>> pts) {
  std::vector<Node> v;
  for (const auto& [x, y] : pts) v.push_back({x, y});
  return make_map(std::move(v));
}

inline Rat q(long n, long d = 1) { return ratio(n, d); }
inline Interval iv(long a, long b, long c, long d) { return Interval(ratio(a, b), ratio(c, d)); }

// The model bump and its copy on (1/4,1/2).
inline PLMap map_a() { return nodes({{q(0), q(0)}, {q(1, 2), q(1, 4)}, {q(3, 4), q(1, 2)}, {q(1), q(1)}}); }
inline PLMap map_b() { return one_bump(iv(1, 4, 1, 2)); }

}  // namespace plo::test
