#include "plo/constructions.hpp"

#include "plo/error.hpp"

namespace plo {

PLMap model_bump() {
  return make_map({{Rat(0), Rat(0)}, {ratio(1, 2), ratio(1, 4)}, {ratio(3, 4), ratio(1, 2)}, {Rat(1), Rat(1)}});
}

PLMap one_bump(const Interval& a) {
  const Rat& l = a.left();
  const Rat len = a.length();
  std::vector<Node> nodes{{Rat(0), Rat(0)}};
  if (l > 0) nodes.push_back({l, l});
  const PLMap model = model_bump();
  for (const auto& n : model.nodes()) {
    if (n.x == 0 || n.x == 1) continue;
    nodes.push_back({l + len * n.x, l + len * n.y});
  }
  if (a.right() < 1) nodes.push_back({a.right(), a.right()});
  nodes.push_back({Rat(1), Rat(1)});
  return make_map(std::move(nodes));
}

PLMap affine_chart(const Interval& from, const Interval& to) {
  if ((from.left() == 0) != (to.left() == 0) || (from.right() == 1) != (to.right() == 1))
    throw Error(ErrorKind::PreconditionViolated,
                "cannot carry " + to_string(from) + " onto " + to_string(to) + " by a homeomorphism of [0,1]");
  std::vector<Node> nodes{{Rat(0), Rat(0)}};
  if (from.left() > 0) nodes.push_back({from.left(), to.left()});
  if (from.right() < 1) nodes.push_back({from.right(), to.right()});
  nodes.push_back({Rat(1), Rat(1)});
  return make_map(std::move(nodes));
}

std::pair<PLMap, PLMap> crossing_pair() {
  return {one_bump(Interval(Rat(0), ratio(3, 4))), one_bump(Interval(ratio(1, 4), Rat(1)))};
}

NestedTower nested_tower(unsigned depth) {
  if (depth == 0) throw Error(ErrorKind::PreconditionViolated, "tower depth must be at least 1");
  if (depth > kMaxTowerDepth)
    throw Error(ErrorKind::ResourceLimit, "tower depth " + std::to_string(depth) + " exceeds " + std::to_string(kMaxTowerDepth));

  GenSet gens{"nested_tower(" + std::to_string(depth) + ")", {}, {}};
  std::vector<SignedOrbital> elements;
  Interval orbital(Rat(0), Rat(1));
  for (unsigned level = 1; level <= depth; ++level) {
    PLMap f = one_bump(orbital);
    gens.generators.push_back(f);
    elements.push_back({orbital, f});
    if (level < depth) orbital = fundamental_domain(orbital.midpoint(), f, orbital).interior();
  }
  return {std::move(gens), Tower(std::move(elements))};
}

GenSet wreath_generators(const Interval& inner, const Interval& outer) {
  if (interval_relation(inner, outer) != Relation::ProperSub)
    throw Error(ErrorKind::PreconditionViolated, to_string(inner) + " is not strictly inside " + to_string(outer));
  PLMap f = one_bump(outer);
  Interval placed = inner;
  if (!lies_in_fundamental_domain(inner, {outer, f})) {
    // Keep the left end when it is inside the outer orbital; otherwise start
    // from the middle of inner. Either way [start, (start)f') is a
    // fundamental domain for the rightward f'.
    PLMap up = rightward(f, outer);
    Rat start = inner.left() > outer.left() ? inner.left() : inner.midpoint();
    Rat end = evaluate(up, start);
    if (inner.right() < end) end = inner.right();
    if (!(start < end)) throw Error(ErrorKind::CannotFit, "no room for " + to_string(inner) + " inside a fundamental domain");
    placed = Interval(start, end);
  }
  return {"wreath", {one_bump(placed), f}, {"h", "f"}};
}

}  // namespace plo
