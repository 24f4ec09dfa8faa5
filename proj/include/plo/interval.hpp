#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include "plo/rational.hpp"

namespace plo {

// Open interval (left, right) with 0 <= left < right <= 1.
class Interval {
 public:
  Interval(Rat left, Rat right);

  const Rat& left() const noexcept { return left_; }
  const Rat& right() const noexcept { return right_; }

  Rat length() const { return right_ - left_; }
  Rat midpoint() const { return plo::midpoint(left_, right_); }

  bool contains(const Rat& x) const { return left_ < x && x < right_; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::strong_ordering operator<=>(const Interval& a, const Interval& b);

 private:
  Rat left_;
  Rat right_;
};

enum class Relation { Disjoint, Equal, ProperSub, ProperSup, Crossing };

const char* to_string(Relation r) noexcept;

Rat length(const Interval& a);

// ProperSub means a is strictly inside b. Open intervals that only touch at an
// endpoint are Disjoint.
Relation interval_relation(const Interval& a, const Interval& b);

// Requires a and b to be nested or equal; throws Error(NotNested) otherwise.
bool shares_end(const Interval& a, const Interval& b);

// Closure-style inclusion: a is a subset of b (equality allowed).
bool is_subset(const Interval& a, const Interval& b);

std::optional<Interval> intersection(const Interval& a, const Interval& b);

std::string to_string(const Interval& a);
std::ostream& operator<<(std::ostream& os, const Interval& a);

struct IntervalHash {
  std::size_t operator()(const Interval& a) const noexcept;
};

}  // namespace plo
