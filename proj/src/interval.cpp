#include "plo/interval.hpp"

#include <ostream>

#include "plo/error.hpp"

namespace plo {

Interval::Interval(Rat left, Rat right) : left_(std::move(left)), right_(std::move(right)) {
  if (!(0 <= left_ && left_ < right_ && right_ <= 1))
    throw Error(ErrorKind::InvalidInterval,
                "(" + to_string(left_) + ", " + to_string(right_) + ") is not inside [0,1] with left < right");
}

std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
  if (int c = cmp(a.left_, b.left_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(a.right_, b.right_);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::Disjoint: return "Disjoint";
    case Relation::Equal: return "Equal";
    case Relation::ProperSub: return "ProperSub";
    case Relation::ProperSup: return "ProperSup";
    case Relation::Crossing: return "Crossing";
  }
  return "?";
}

Rat length(const Interval& a) { return a.length(); }

bool is_subset(const Interval& a, const Interval& b) {
  return b.left() <= a.left() && a.right() <= b.right();
}

Relation interval_relation(const Interval& a, const Interval& b) {
  if (a.right() <= b.left() || b.right() <= a.left()) return Relation::Disjoint;
  if (a == b) return Relation::Equal;
  if (is_subset(a, b)) return Relation::ProperSub;
  if (is_subset(b, a)) return Relation::ProperSup;
  return Relation::Crossing;
}

bool shares_end(const Interval& a, const Interval& b) {
  if (!is_subset(a, b) && !is_subset(b, a))
    throw Error(ErrorKind::NotNested, to_string(a) + " and " + to_string(b) + " are not nested");
  return a.left() == b.left() || a.right() == b.right();
}

std::optional<Interval> intersection(const Interval& a, const Interval& b) {
  const Rat& lo = a.left() < b.left() ? b.left() : a.left();
  const Rat& hi = a.right() < b.right() ? a.right() : b.right();
  if (!(lo < hi)) return std::nullopt;
  return Interval(lo, hi);
}

std::string to_string(const Interval& a) {
  return "(" + to_string(a.left()) + ", " + to_string(a.right()) + ")";
}

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << to_string(a); }

std::size_t IntervalHash::operator()(const Interval& a) const noexcept {
  std::size_t seed = hash_value(a.left());
  hash_combine(seed, hash_value(a.right()));
  return seed;
}

}  // namespace plo
