#include "plo/pl_map.hpp"

#include <algorithm>
#include <ostream>

#include "plo/error.hpp"
#include "plo/orbital.hpp"

namespace plo {

PLMap::PLMap() : nodes_{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}} {}

Rat PLMap::slope(std::size_t segment) const {
  const Node& a = nodes_[segment];
  const Node& b = nodes_[segment + 1];
  Rat s = (b.y - a.y) / (b.x - a.x);
  return s;
}

std::size_t PLMap::segment_at(const Rat& x) const {
  // First node with node.x > x, then step back one.
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x,
                             [](const Rat& v, const Node& n) { return v < n.x; });
  std::size_t idx = static_cast<std::size_t>(it - nodes_.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, segment_count() - 1);
}

bool operator<(const PLMap& a, const PLMap& b) {
  return std::lexicographical_compare(a.nodes_.begin(), a.nodes_.end(), b.nodes_.begin(), b.nodes_.end(),
                                      [](const Node& p, const Node& q) {
                                        if (int c = cmp(p.x, q.x); c != 0) return c < 0;
                                        return p.y < q.y;
                                      });
}

namespace {

bool collinear(const Node& a, const Node& b, const Node& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

std::string node_text(const Node& n) { return to_string(n.x) + "," + to_string(n.y); }

}  // namespace

PLMap make_map(std::vector<Node> nodes) {
  if (nodes.empty()) throw Error(ErrorKind::EndpointsNotFixed, "empty node list");
  if (nodes.front() != Node{Rat(0), Rat(0)})
    throw Error(ErrorKind::EndpointsNotFixed, "first node is " + node_text(nodes.front()) + ", expected 0,0");
  if (nodes.back() != Node{Rat(1), Rat(1)})
    throw Error(ErrorKind::EndpointsNotFixed, "last node is " + node_text(nodes.back()) + ", expected 1,1");
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i - 1].x < nodes[i].x) || !(nodes[i - 1].y < nodes[i].y))
      throw Error(ErrorKind::NotMonotone,
                  "nodes " + node_text(nodes[i - 1]) + " and " + node_text(nodes[i]) + " are not strictly increasing");
  }

  std::vector<Node> out;
  out.reserve(nodes.size());
  for (auto& n : nodes) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), n)) out.pop_back();
    out.push_back(std::move(n));
  }
  return PLMap(std::move(out));
}

Rat evaluate(const PLMap& f, const Rat& x) {
  if (x < 0 || x > 1) throw Error(ErrorKind::OutOfDomain, to_string(x) + " is outside [0,1]");
  const auto& n = f.nodes();
  std::size_t i = f.segment_at(x);
  if (x == n[i].x) return n[i].y;
  Rat y = n[i].y + (x - n[i].x) * (n[i + 1].y - n[i].y) / (n[i + 1].x - n[i].x);
  return y;
}

Rat evaluate_inverse(const PLMap& f, const Rat& y) {
  if (y < 0 || y > 1) throw Error(ErrorKind::OutOfDomain, to_string(y) + " is outside [0,1]");
  const auto& n = f.nodes();
  auto it = std::upper_bound(n.begin(), n.end(), y, [](const Rat& v, const Node& node) { return v < node.y; });
  std::size_t idx = static_cast<std::size_t>(it - n.begin());
  std::size_t i = idx == 0 ? 0 : std::min(idx - 1, f.segment_count() - 1);
  if (y == n[i].y) return n[i].x;
  Rat x = n[i].x + (y - n[i].y) * (n[i + 1].x - n[i].x) / (n[i + 1].y - n[i].y);
  return x;
}

PLMap compose(const PLMap& f, const PLMap& g) {
  // Breakpoints of the composite lie in B_f and in the preimage of B_g.
  std::vector<Rat> xs;
  xs.reserve(f.nodes().size());
  for (const auto& n : f.nodes()) xs.push_back(n.x);
  std::vector<Rat> pulled;
  pulled.reserve(g.nodes().size());
  for (const auto& n : g.nodes()) pulled.push_back(evaluate_inverse(f, n.x));

  std::vector<Rat> grid;
  grid.reserve(xs.size() + pulled.size());
  std::merge(xs.begin(), xs.end(), pulled.begin(), pulled.end(), std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<Node> nodes;
  nodes.reserve(grid.size());
  for (auto& x : grid) {
    Rat y = evaluate(g, evaluate(f, x));
    nodes.push_back({std::move(x), std::move(y)});
  }
  return make_map(std::move(nodes));
}

PLMap invert(const PLMap& f) {
  std::vector<Node> nodes;
  nodes.reserve(f.nodes().size());
  for (const auto& n : f.nodes()) nodes.push_back({n.y, n.x});
  return make_map(std::move(nodes));
}

PLMap conjugate(const PLMap& g, const PLMap& c) { return compose(compose(invert(c), g), c); }

PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(compose(compose(invert(f), invert(g)), f), g);
}

PLMap power(const PLMap& f, long n) {
  PLMap base = n < 0 ? invert(f) : f;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  PLMap result;
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

std::vector<Rat> breakpoints(const PLMap& f) {
  std::vector<Rat> out;
  const auto& n = f.nodes();
  for (std::size_t i = 1; i + 1 < n.size(); ++i) out.push_back(n[i].x);
  return out;
}

bool is_breakpoint(const PLMap& f, const Rat& x) {
  const auto& n = f.nodes();
  auto it = std::lower_bound(n.begin() + 1, n.end() - 1, x, [](const Node& node, const Rat& v) { return node.x < v; });
  return it != n.end() - 1 && it->x == x;
}

std::vector<AffineComponent> affine_components(const PLMap& f) {
  std::vector<AffineComponent> out;
  const auto& n = f.nodes();
  for (std::size_t i = 0; i + 1 < n.size(); ++i) out.push_back({n[i].x, n[i + 1].x, f.slope(i)});
  return out;
}

Rat right_slope(const PLMap& f, const Rat& x) {
  if (x < 0 || x >= 1) throw Error(ErrorKind::OutOfDomain, "no right slope at " + to_string(x));
  return f.slope(f.segment_at(x));
}

Rat left_slope(const PLMap& f, const Rat& x) {
  if (x <= 0 || x > 1) throw Error(ErrorKind::OutOfDomain, "no left slope at " + to_string(x));
  std::size_t i = f.segment_at(x);
  if (f.nodes()[i].x == x) --i;
  return f.slope(i);
}

BoundarySlopes boundary_slopes(const PLMap& f, const Interval& orbital) {
  auto orbs = orbitals(f);
  if (std::find(orbs.begin(), orbs.end(), orbital) == orbs.end())
    throw Error(ErrorKind::NotAnOrbital, to_string(orbital) + " is not an orbital of the map");
  return {right_slope(f, orbital.left()), left_slope(f, orbital.right())};
}

Interval image(const Interval& a, const PLMap& f) {
  return Interval(evaluate(f, a.left()), evaluate(f, a.right()));
}

std::ostream& operator<<(std::ostream& os, const PLMap& f) {
  bool first = true;
  for (const auto& n : f.nodes()) {
    if (!first) os << ' ';
    os << node_text(n);
    first = false;
  }
  return os;
}

std::size_t PLMapHash::operator()(const PLMap& f) const noexcept {
  std::size_t seed = f.nodes().size();
  for (const auto& n : f.nodes()) {
    hash_combine(seed, hash_value(n.x));
    hash_combine(seed, hash_value(n.y));
  }
  return seed;
}

}  // namespace plo
