#include "plo/countability.hpp"

#include <algorithm>
#include <map>

#include "plo/error.hpp"

namespace plo {

bool operator<(const BumpCode& a, const BumpCode& b) {
  if (a.initial_slope != b.initial_slope) return a.initial_slope < b.initial_slope;
  return std::lexicographical_compare(a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
                                      [](const BumpStep& p, const BumpStep& q) {
                                        if (p.bouncepoint != q.bouncepoint) return p.bouncepoint < q.bouncepoint;
                                        return p.slope_leaving < q.slope_leaving;
                                      });
}

std::string to_string(const BumpCode& code) {
  std::string out = "(" + to_string(code.initial_slope);
  for (const auto& s : code.steps) out += "; " + to_string(s.bouncepoint) + " -> " + to_string(s.slope_leaving);
  return out + ")";
}

namespace {

Rat two_thirds_pow(unsigned n) {
  Rat r(1);
  for (unsigned i = 0; i < n; ++i) r *= ratio(2, 3);
  return r;
}

}  // namespace

Rat LengthClass::lower() const { return two_thirds_pow(index); }
Rat LengthClass::upper() const { return two_thirds_pow(index - 1); }

std::vector<Interval> witness_intervals(const Tower& t, const WitnessChoice& choice) {
  if (!(0 < choice.position && choice.position < 1))
    throw Error(ErrorKind::PreconditionViolated, "witness position must lie strictly between 0 and 1");
  auto sigs = t.signatures();
  if (auto cert = detect_transition_chain(sigs))
    throw Error(ErrorKind::PreconditionViolated, "tower signatures form a transition chain over " + to_string(cert->overlap));

  std::vector<Interval> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Interval& a = t[i].orbital;
    if (i == 0) {
      out.push_back(a);
      continue;
    }
    const Interval& b = t[i - 1 - std::min(choice.below, i - 1)].orbital;
    Rat x = b.left() + choice.position * b.length();
    PLMap up = rightward(t[i].signature, a);
    out.emplace_back(a.left(), evaluate_inverse(up, x));
  }
  return out;
}

LengthClass length_class(const Rat& length) {
  if (!(0 < length && length <= 1))
    throw Error(ErrorKind::InvalidInterval, "length " + to_string(length) + " is outside (0,1]");
  LengthClass c;
  Rat lower(2, 3);
  while (!(lower < length)) {
    lower *= ratio(2, 3);
    ++c.index;
  }
  return c;
}

LengthClass length_class(const Interval& a) { return length_class(a.length()); }

bool chain_partition_check(std::span<const Interval> pool, const Interval& o) {
  const LengthClass cls = length_class(o);
  for (const auto& a : pool) {
    if (interval_relation(a, o) == Relation::Disjoint)
      throw Error(ErrorKind::PreconditionViolated, to_string(a) + " does not meet " + to_string(o));
    if (length_class(a) != cls)
      throw Error(ErrorKind::PreconditionViolated, to_string(a) + " and " + to_string(o) + " lie in different length classes");
  }
  std::vector<Interval> all(pool.begin(), pool.end());
  all.push_back(o);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (interval_relation(all[i], all[j]) == Relation::Crossing)
        throw Error(ErrorKind::PreconditionViolated, to_string(all[i]) + " and " + to_string(all[j]) + " cross");
  return is_stack(all);
}

std::vector<Rat> bouncepoints(const PLMap& f, const PLMap& g) {
  auto bf = breakpoints(f);
  auto bg = breakpoints(g);
  std::vector<Rat> candidates;
  std::merge(bf.begin(), bf.end(), bg.begin(), bg.end(), std::back_inserter(candidates));
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Rat> out;
  for (auto& b : candidates)
    if (evaluate(f, b) == evaluate(g, b) && right_slope(f, b) != right_slope(g, b)) out.push_back(std::move(b));
  return out;
}

std::vector<Rat> corners(const PLMap& f, const PLMap& g) {
  std::vector<Rat> grid;
  for (const auto& n : f.nodes()) grid.push_back(n.x);
  for (const auto& n : g.nodes()) grid.push_back(n.x);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  // Both maps are affine on each grid cell, so f - g has at most one zero
  // strictly inside it unless it vanishes on the whole cell.
  std::vector<Rat> out;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const Rat& u = grid[i];
    const Rat& v = grid[i + 1];
    Rat du = evaluate(f, u) - evaluate(g, u);
    Rat dv = evaluate(f, v) - evaluate(g, v);
    if (sgn(du) * sgn(dv) < 0) {
      Rat b = u + du * (v - u) / (du - dv);
      out.push_back(std::move(b));
    }
  }
  return out;
}

bool endpoint_witness(const Rat& b, const PLMap& f, const PLMap& g) {
  for (const auto& a : orbitals(compose(f, invert(g))))
    if (a.left() == b || a.right() == b) return true;
  return false;
}

BumpCode bump_code(const PLMap& f, const Interval& o, std::span<const PLMap> context) {
  BumpCode code{boundary_slopes(f, o).initial, {}};
  for (const auto& g : context)
    if (!is_orbital(g, o))
      throw Error(ErrorKind::ContextOrbitalMismatch, "a context map does not have orbital " + to_string(o));

  for (const auto& b : breakpoints(f)) {
    if (!o.contains(b)) continue;
    const Rat fb = evaluate(f, b);
    const Rat leaving = right_slope(f, b);
    bool bounces = std::any_of(context.begin(), context.end(), [&](const PLMap& g) {
      return evaluate(g, b) == fb && right_slope(g, b) != leaving;
    });
    if (bounces) code.steps.push_back({b, leaving});
  }
  return code;
}

InjectivityReport check_injectivity(std::span<const PLMap> bumps, const Interval& o) {
  for (const auto& f : bumps) {
    auto orbs = orbitals(f);
    if (orbs.size() != 1 || orbs.front() != o)
      throw Error(ErrorKind::PreconditionViolated, "every bump must have " + to_string(o) + " as its only orbital");
  }
  InjectivityReport report;
  report.total = bumps.size();
  std::map<BumpCode, std::vector<std::size_t>> by_code;
  for (std::size_t i = 0; i < bumps.size(); ++i) {
    report.codes.push_back(bump_code(bumps[i], o, bumps));
    by_code[report.codes.back()].push_back(i);
  }
  report.distinct_codes = by_code.size();
  for (const auto& [code, idx] : by_code)
    for (std::size_t p = 0; p < idx.size(); ++p)
      for (std::size_t q = p + 1; q < idx.size(); ++q)
        if (bumps[idx[p]] != bumps[idx[q]]) report.collisions.emplace_back(idx[p], idx[q]);
  std::sort(report.collisions.begin(), report.collisions.end());
  return report;
}

}  // namespace plo
