#include "plo/random.hpp"

#include <algorithm>
#include <set>

namespace plo {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = engine_.max() - engine_.max() % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

namespace {

const std::vector<long> kDenominators{2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 36, 48, 72, 144};
const std::vector<Rat> kFractions{ratio(1, 4), ratio(1, 3), ratio(1, 2), ratio(2, 3), ratio(3, 4)};

// A point strictly between u and v.
Rat between(Rng& rng, const Rat& u, const Rat& v) {
  Rat r = u + rng.pick(kFractions) * (v - u);
  return r;
}

std::vector<Rat> distinct_sorted(Rng& rng, std::size_t count) {
  std::set<Rat> picked;
  while (picked.size() < count) picked.insert(random_unit_rat(rng));
  return {picked.begin(), picked.end()};
}

// Continues a one-orbital node list from `last` (already inside the orbital)
// to the orbital's right end, keeping every interior node on the same side
// of the diagonal as `left_mover` says.
void extend_bump(Rng& rng, std::vector<Node>& nodes, const Interval& orbital, bool left_mover, std::size_t count) {
  const Rat& r = orbital.right();
  for (std::size_t i = 0; i < count; ++i) {
    const Node& last = nodes.back();
    if (left_mover) {
      Rat x = between(rng, last.x, r);
      Rat y = between(rng, last.y, x);
      nodes.push_back({std::move(x), std::move(y)});
    } else {
      Rat y = between(rng, last.y, r);
      Rat x = between(rng, last.x, y);
      nodes.push_back({std::move(x), std::move(y)});
    }
  }
  nodes.push_back({r, r});
}

std::vector<Node> close_map(std::vector<Node> inside, const Interval& orbital) {
  std::vector<Node> nodes{{Rat(0), Rat(0)}};
  if (orbital.left() > 0) nodes.push_back({orbital.left(), orbital.left()});
  for (auto& n : inside)
    if (n.x != orbital.left()) nodes.push_back(std::move(n));
  if (orbital.right() < 1) nodes.push_back({Rat(1), Rat(1)});
  return nodes;
}

}  // namespace

Rat random_unit_rat(Rng& rng) {
  long d = rng.pick(kDenominators);
  long n = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(d - 1)));
  Rat r(n, d);
  r.canonicalize();
  return r;
}

PLMap random_map(Rng& rng, std::size_t max_nodes) {
  std::size_t interior = max_nodes > 2 ? rng.below(max_nodes - 1) : 0;
  auto xs = distinct_sorted(rng, interior);
  auto ys = distinct_sorted(rng, interior);
  std::vector<Node> nodes{{Rat(0), Rat(0)}};
  for (std::size_t i = 0; i < interior; ++i) nodes.push_back({xs[i], ys[i]});
  nodes.push_back({Rat(1), Rat(1)});
  return make_map(std::move(nodes));
}

Interval random_interval(Rng& rng) {
  for (;;) {
    Rat a = rng.below(5) == 0 ? Rat(0) : random_unit_rat(rng);
    Rat b = rng.below(5) == 0 ? Rat(1) : random_unit_rat(rng);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    return Interval(a, b);
  }
}

Interval random_subinterval(Rng& rng, const Interval& a) {
  Rat lo = rng.below(4) == 0 ? a.left() : between(rng, a.left(), a.right());
  Rat hi = rng.below(4) == 0 ? a.right() : between(rng, lo, a.right());
  return Interval(lo, hi);
}

PLMap random_bump_on(Rng& rng, const Interval& orbital, std::size_t interior_nodes) {
  std::vector<Node> inside{{orbital.left(), orbital.left()}};
  std::size_t count = 1 + rng.below(std::max<std::size_t>(interior_nodes, 1));
  extend_bump(rng, inside, orbital, rng.coin(), count);
  return make_map(close_map(std::move(inside), orbital));
}

FundamentalPair random_fundamental_pair(Rng& rng) {
  Interval outer = random_interval(rng);
  PLMap big = random_bump_on(rng, outer);
  Rat x = between(rng, outer.left(), outer.right());
  Interval domain = fundamental_domain(x, big, outer).interior();
  Interval inner = random_subinterval(rng, domain);
  return {{inner, random_bump_on(rng, inner)}, {outer, big}};
}

Tower random_tower(Rng& rng, std::size_t depth) {
  const bool extras = rng.coin();
  Interval orbital = extras ? random_subinterval(rng, Interval(Rat(0), ratio(1, 2))) : Interval(Rat(0), Rat(1));
  std::vector<SignedOrbital> elements;
  for (std::size_t level = 0; level < depth; ++level) {
    PLMap sig = random_bump_on(rng, orbital);
    if (extras && rng.coin()) {
      Rat width = ratio(1, 2) / static_cast<long>(depth);
      Interval slot(ratio(1, 2) + width * static_cast<long>(level), ratio(1, 2) + width * static_cast<long>(level + 1));
      sig = compose(sig, random_bump_on(rng, random_subinterval(rng, slot)));
    }
    elements.push_back({orbital, sig});
    if (level + 1 < depth) {
      Rat x = between(rng, orbital.left(), orbital.right());
      orbital = random_subinterval(rng, fundamental_domain(x, sig, orbital).interior());
    }
  }
  return Tower(std::move(elements));
}

std::vector<PLMap> random_bump_family(Rng& rng, const Interval& orbital, std::size_t count) {
  std::vector<PLMap> out;
  std::set<PLMap> seen;
  while (out.size() < count) {
    PLMap candidate;
    if (out.empty() || rng.below(3) == 0) {
      candidate = random_bump_on(rng, orbital, 5);
    } else {
      // Keep a prefix of an earlier member and regrow the rest.
      const PLMap& base = rng.pick(out);
      std::vector<Node> inside;
      for (const auto& n : base.nodes())
        if (orbital.left() <= n.x && n.x < orbital.right()) inside.push_back(n);
      std::size_t keep = 2 + rng.below(inside.size() - 1);
      if (keep > inside.size()) keep = inside.size();
      inside.resize(keep);
      bool left_mover = evaluate(base, orbital.midpoint()) < orbital.midpoint();
      extend_bump(rng, inside, orbital, left_mover, 1 + rng.below(3));
      candidate = make_map(close_map(std::move(inside), orbital));
    }
    if (seen.insert(candidate).second) out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace plo
