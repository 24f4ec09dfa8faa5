#include "plo/orbital.hpp"

#include <algorithm>
#include <sstream>

#include "plo/error.hpp"

namespace plo {

HalfOpen::HalfOpen(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(0 <= lo_ && lo_ < hi_ && hi_ <= 1))
    throw Error(ErrorKind::InvalidInterval, "[" + plo::to_string(lo_) + ", " + plo::to_string(hi_) + ") is empty or leaves [0,1]");
}

std::string to_string(const HalfOpen& d) { return "[" + to_string(d.lo()) + ", " + to_string(d.hi()) + ")"; }

std::string GenSet::label(std::size_t i) const {
  if (i < labels.size() && !labels[i].empty()) return labels[i];
  return "g" + std::to_string(i + 1);
}

std::vector<std::size_t> GenSet::duplicate_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < generators.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (generators[i] == generators[j]) {
        out.push_back(j);
        break;
      }
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int letter : w) {
    if (!out.empty()) out += ' ';
    out += "g" + std::to_string(letter < 0 ? -letter : letter);
    if (letter < 0) out += "^-1";
  }
  return out;
}

namespace {

const PLMap& generator_of(const GenSet& g, int letter) {
  std::size_t idx = static_cast<std::size_t>(letter < 0 ? -letter : letter);
  if (letter == 0 || idx > g.generators.size())
    throw Error(ErrorKind::PreconditionViolated, "letter " + std::to_string(letter) + " names no generator");
  return g.generators[idx - 1];
}

}  // namespace

PLMap evaluate_word(const GenSet& g, const Word& w) {
  PLMap out;
  for (int letter : w) {
    const PLMap& gen = generator_of(g, letter);
    out = compose(out, letter < 0 ? invert(gen) : gen);
  }
  return out;
}

Rat apply_letter(const GenSet& g, int letter, const Rat& x) {
  const PLMap& gen = generator_of(g, letter);
  return letter < 0 ? evaluate_inverse(gen, x) : evaluate(gen, x);
}

const char* to_string(Direction d) noexcept { return d == Direction::Right ? "Right" : "Left"; }

std::vector<Interval> orbitals(const PLMap& f) {
  // The fixed set is a finite union of points and closed segments. Collect
  // every fixed point except the interiors of pointwise-fixed segments; two
  // consecutive collected points bound an orbital unless the segment between
  // them is fixed.
  const auto& n = f.nodes();
  std::vector<Rat> fixed;
  for (std::size_t i = 0; i < n.size(); ++i) {
    Rat d = n[i].y - n[i].x;
    if (d == 0) fixed.push_back(n[i].x);
    if (i + 1 < n.size()) {
      Rat d_next = n[i + 1].y - n[i + 1].x;
      if (sgn(d) * sgn(d_next) < 0) {
        // d is affine on the segment; solve d(x) = 0.
        Rat x = n[i].x + d * (n[i + 1].x - n[i].x) / (d - d_next);
        fixed.push_back(std::move(x));
      }
    }
  }
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < fixed.size(); ++i) {
    Rat mid = midpoint(fixed[i], fixed[i + 1]);
    if (evaluate(f, mid) != mid) out.emplace_back(fixed[i], fixed[i + 1]);
  }
  return out;
}

bool is_orbital(const PLMap& f, const Interval& a) {
  auto orbs = orbitals(f);
  return std::binary_search(orbs.begin(), orbs.end(), a);
}

namespace {

void require_orbital(const PLMap& f, const Interval& a) {
  if (is_orbital(f, a)) return;
  std::ostringstream os;
  os << to_string(a) << " is not an orbital of [" << f << "]";
  throw Error(ErrorKind::NotAnOrbital, os.str());
}

}  // namespace

PLMap bump(const PLMap& f, const Interval& orbital) {
  require_orbital(f, orbital);
  std::vector<Node> nodes{{Rat(0), Rat(0)}};
  if (orbital.left() > 0) nodes.push_back({orbital.left(), orbital.left()});
  for (const auto& nd : f.nodes())
    if (orbital.contains(nd.x)) nodes.push_back(nd);
  if (orbital.right() < 1) nodes.push_back({orbital.right(), orbital.right()});
  nodes.push_back({Rat(1), Rat(1)});
  return make_map(std::move(nodes));
}

Direction direction(const PLMap& f, const Interval& orbital) {
  require_orbital(f, orbital);
  Rat mid = orbital.midpoint();
  return evaluate(f, mid) > mid ? Direction::Right : Direction::Left;
}

PLMap rightward(const PLMap& f, const Interval& orbital) {
  return direction(f, orbital) == Direction::Right ? f : invert(f);
}

HalfOpen fundamental_domain(const Rat& x, const PLMap& f, const Interval& orbital) {
  require_orbital(f, orbital);
  if (!orbital.contains(x))
    throw Error(ErrorKind::NotInOrbital, to_string(x) + " is not in " + to_string(orbital));
  Rat image = evaluate(f, x);
  if (image > x) return HalfOpen(x, std::move(image));
  return HalfOpen(std::move(image), x);
}

bool lies_in_fundamental_domain(const Interval& a, const SignedOrbital& b) {
  if (interval_relation(a, b.orbital) != Relation::ProperSub)
    throw Error(ErrorKind::NotNested, to_string(a) + " is not strictly inside " + to_string(b.orbital));
  PLMap up = rightward(b.signature, b.orbital);
  return evaluate(up, a.left()) >= a.right();
}

std::vector<Interval> group_orbitals(const GenSet& g) {
  std::vector<Interval> all;
  for (const auto& gen : g.generators) {
    auto orbs = orbitals(gen);
    all.insert(all.end(), orbs.begin(), orbs.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<Interval> out;
  for (const auto& a : all) {
    // A shared endpoint is fixed by every generator, so touching intervals
    // stay separate.
    if (!out.empty() && a.left() < out.back().right()) {
      if (a.right() > out.back().right()) out.back() = Interval(out.back().left(), a.right());
    } else {
      out.push_back(a);
    }
  }
  return out;
}

MoverResult find_mover(const GenSet& g, const Rat& x, const Rat& y, std::size_t radius) {
  if (!(x < y)) throw Error(ErrorKind::PreconditionViolated, "find_mover needs x < y");
  auto comps = group_orbitals(g);
  auto holder = std::find_if(comps.begin(), comps.end(), [&](const Interval& c) { return c.contains(x); });
  if (holder == comps.end() || !holder->contains(y))
    throw Error(ErrorKind::NotSameOrbital, to_string(x) + " and " + to_string(y) + " are not in one orbital of the group");

  std::vector<int> letters;
  for (int k = 1; k <= static_cast<int>(g.generators.size()); ++k) {
    letters.push_back(k);
    letters.push_back(-k);
  }

  struct State {
    Word word;
    Rat point;
  };
  MoverResult result;
  std::vector<State> frontier{{{}, x}};
  for (std::size_t len = 1; len <= radius; ++len) {
    std::vector<State> next;
    for (const auto& s : frontier) {
      for (int letter : letters) {
        if (!s.word.empty() && s.word.back() == -letter) continue;
        State t{s.word, apply_letter(g, letter, s.point)};
        t.word.push_back(letter);
        ++result.words_examined;
        if (t.point > y) {
          result.word = std::move(t.word);
          result.radius = len;
          return result;
        }
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  result.radius = radius;
  return result;
}

}  // namespace plo
