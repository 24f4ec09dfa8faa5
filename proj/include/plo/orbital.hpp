#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plo/interval.hpp"
#include "plo/pl_map.hpp"

namespace plo {

struct SignedOrbital {
  Interval orbital;
  PLMap signature;

  friend bool operator==(const SignedOrbital&, const SignedOrbital&) = default;
};

// Half-open [lo, hi) with 0 <= lo < hi <= 1.
class HalfOpen {
 public:
  HalfOpen(Rat lo, Rat hi);

  const Rat& lo() const noexcept { return lo_; }
  const Rat& hi() const noexcept { return hi_; }

  bool contains(const Rat& x) const { return lo_ <= x && x < hi_; }
  bool contains(const Interval& a) const { return lo_ <= a.left() && a.right() <= hi_; }
  Interval interior() const { return Interval(lo_, hi_); }

  friend bool operator==(const HalfOpen&, const HalfOpen&) = default;

 private:
  Rat lo_;
  Rat hi_;
};

std::string to_string(const HalfOpen& d);

// A named finite generating set standing for the subgroup it generates.
struct GenSet {
  std::string name;
  std::vector<PLMap> generators;
  std::vector<std::string> labels;  // may be shorter than generators

  // labels[i] when present, else "g<i+1>".
  std::string label(std::size_t i) const;

  // Indices j > i with generators[j] == generators[i].
  std::vector<std::size_t> duplicate_indices() const;
};

// A word over generators: letter k > 0 is g_k, k < 0 is g_{|k|}^{-1}.
using Word = std::vector<int>;

std::string to_string(const Word& w);
PLMap evaluate_word(const GenSet& g, const Word& w);
Rat apply_letter(const GenSet& g, int letter, const Rat& x);

enum class Direction { Right, Left };
const char* to_string(Direction d) noexcept;

// Maximal open intervals of the support, ascending.
std::vector<Interval> orbitals(const PLMap& f);
bool is_orbital(const PLMap& f, const Interval& a);

// f on `orbital`, identity elsewhere. Throws Error(NotAnOrbital).
PLMap bump(const PLMap& f, const Interval& orbital);

Direction direction(const PLMap& f, const Interval& orbital);

// f or its inverse, whichever moves points right on `orbital`.
PLMap rightward(const PLMap& f, const Interval& orbital);

// [x, (x)f) for a right-mover, [(x)f, x) for a left-mover.
HalfOpen fundamental_domain(const Rat& x, const PLMap& f, const Interval& orbital);

// Whether `a` fits in some fundamental domain of the signed orbital. Uses
// the fact that this holds exactly when the rightward signature moves a off
// itself. Throws Error(NotNested) unless a is strictly inside b.orbital.
bool lies_in_fundamental_domain(const Interval& a, const SignedOrbital& b);

// Components of the union of the generators' supports, ascending.
std::vector<Interval> group_orbitals(const GenSet& g);

struct MoverResult {
  std::optional<Word> word;  // empty: nothing within the radius
  std::size_t radius = 0;
  std::size_t words_examined = 0;
};

// Breadth-first search over freely reduced words of length <= radius for w
// with (x)w > y. Letters are tried in the order g1, g1^-1, g2, g2^-1, ...
// so the first hit is the shortest, lexicographically least one. A miss is
// not a proof that no such element exists. Throws Error(NotSameOrbital).
MoverResult find_mover(const GenSet& g, const Rat& x, const Rat& y, std::size_t radius);

}  // namespace plo
