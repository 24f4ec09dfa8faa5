#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "plo/interval.hpp"
#include "plo/rational.hpp"

namespace plo {

struct Node {
  Rat x;
  Rat y;

  friend bool operator==(const Node&, const Node&) = default;
};

struct AffineComponent {
  Rat lo;
  Rat hi;
  Rat slope;

  friend bool operator==(const AffineComponent&, const AffineComponent&) = default;
};

struct BoundarySlopes {
  Rat initial;
  Rat terminal;

  friend bool operator==(const BoundarySlopes&, const BoundarySlopes&) = default;
};

// A piecewise-linear orientation-preserving homeomorphism of [0,1].
//
// The node list always starts at (0,0), ends at (1,1), is strictly increasing
// in both coordinates and has no interior node where the slope does not
// change. Two maps are therefore equal exactly when their node lists are.
// Maps act on the right: compose(f, g) is "f, then g".
class PLMap {
 public:
  PLMap();  // identity

  static PLMap identity() { return PLMap(); }

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t segment_count() const noexcept { return nodes_.size() - 1; }
  bool is_identity() const noexcept { return nodes_.size() == 2; }

  Rat slope(std::size_t segment) const;

  // Index of the segment [x_i, x_{i+1}) containing x, with x = 1 mapped to the
  // last segment.
  std::size_t segment_at(const Rat& x) const;

  friend bool operator==(const PLMap&, const PLMap&) = default;
  friend bool operator<(const PLMap& a, const PLMap& b);

 private:
  friend PLMap make_map(std::vector<Node> nodes);
  explicit PLMap(std::vector<Node> canonical) : nodes_(std::move(canonical)) {}

  std::vector<Node> nodes_;
};

// Validates and canonicalizes. Throws Error(EndpointsNotFixed) or
// Error(NotMonotone).
PLMap make_map(std::vector<Node> nodes);

// (x)f. Throws Error(OutOfDomain) outside [0,1].
Rat evaluate(const PLMap& f, const Rat& x);

// (y)f^{-1} without building the inverse map.
Rat evaluate_inverse(const PLMap& f, const Rat& y);

PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
PLMap conjugate(const PLMap& g, const PLMap& c);  // c^{-1} g c
PLMap commutator(const PLMap& f, const PLMap& g);  // f^{-1} g^{-1} f g
PLMap power(const PLMap& f, long n);

std::vector<Rat> breakpoints(const PLMap& f);
bool is_breakpoint(const PLMap& f, const Rat& x);
std::vector<AffineComponent> affine_components(const PLMap& f);

// Slope of f on a small interval (x, x + e). Requires 0 <= x < 1.
Rat right_slope(const PLMap& f, const Rat& x);
// Slope of f on a small interval (x - e, x). Requires 0 < x <= 1.
Rat left_slope(const PLMap& f, const Rat& x);

// Initial and terminal slopes of f on one of its orbitals. Throws
// Error(NotAnOrbital).
BoundarySlopes boundary_slopes(const PLMap& f, const Interval& orbital);

// Image (a)f, (b)f of an open interval.
Interval image(const Interval& a, const PLMap& f);

std::ostream& operator<<(std::ostream& os, const PLMap& f);

struct PLMapHash {
  std::size_t operator()(const PLMap& f) const noexcept;
};

}  // namespace plo
