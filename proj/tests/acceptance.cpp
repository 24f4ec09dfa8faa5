// Acceptance suite: one line per criterion, exit status 0 only if all pass.
#include <plo/chains.hpp>
#include <plo/constructions.hpp>
#include <plo/countability.hpp>
#include <plo/error.hpp>
#include <plo/io.hpp>
#include <plo/random.hpp>
#include <plo/verify.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

using namespace plo;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

// Node interpolation written out here so the group checks do not lean on
// the library evaluator.
Rat interpolate(const PLMap& f, const Rat& x) {
  const auto& n = f.nodes();
  for (std::size_t i = 0; i + 1 < n.size(); ++i) {
    if (n[i].x <= x && x <= n[i + 1].x) {
      Rat t = (x - n[i].x) / (n[i + 1].x - n[i].x);
      return n[i].y + t * (n[i + 1].y - n[i].y);
    }
  }
  throw std::logic_error("point outside [0,1]");
}

std::vector<Rat> probe_points(const PLMap& f, const PLMap& g) {
  std::vector<Rat> xs;
  for (const auto& n : f.nodes()) xs.push_back(n.x);
  for (const auto& n : g.nodes()) xs.push_back(n.x);
  for (long k = 1; k < 16; ++k) xs.push_back(ratio(2 * k - 1, 32));
  return xs;
}

Outcome group_algebra() {
  Outcome out;
  Rng rng(1001);
  std::vector<PLMap> maps;
  for (int i = 0; i < 1000; ++i) maps.push_back(random_map(rng, 12));
  for (std::size_t i = 0; i < maps.size() && out.ok; ++i) {
    const PLMap& f = maps[i];
    const PLMap& g = maps[(i + 1) % maps.size()];
    const PLMap& h = maps[(i + 7) % maps.size()];
    std::string tag = " (map " + std::to_string(i) + ")";
    out.require(f.nodes().size() <= 12, "generator exceeded 12 nodes" + tag);
    PLMap fg = compose(f, g);
    for (const Rat& x : probe_points(f, g))
      out.require(interpolate(fg, x) == interpolate(g, interpolate(f, x)), "compose pointwise" + tag);
    PLMap fi = invert(f);
    for (const auto& n : f.nodes()) out.require(interpolate(fi, n.y) == n.x, "invert pointwise" + tag);
    out.require(compose(fg, h) == compose(f, compose(g, h)), "associativity" + tag);
    out.require(compose(f, fi).is_identity() && compose(fi, f).is_identity(), "inverse" + tag);
    out.require(compose(f, PLMap()) == f && compose(PLMap(), f) == f, "identity" + tag);
    out.require(invert(fi) == f, "double inverse" + tag);
    out.require(invert(fg) == compose(invert(g), fi), "inverse of product" + tag);
    long m = static_cast<long>(rng.below(7)) - 3;
    long n = static_cast<long>(rng.below(7)) - 3;
    out.require(power(f, m + n) == compose(power(f, m), power(f, n)), "power addition" + tag);
    out.require(power(f, -n) == invert(power(f, n)), "negative power" + tag);
    out.require(power(f, 0).is_identity(), "zeroth power" + tag);
    out.require(conjugate(f, g) == compose(compose(invert(g), f), g), "conjugate" + tag);
    out.require(commutator(f, g) == compose(compose(fi, invert(g)), fg), "commutator" + tag);
  }
  out.detail = out.ok ? "1000 maps, exact" : out.detail;
  return out;
}

Outcome conjugation() {
  Outcome out;
  Rng rng(1002);
  for (int i = 0; i < 1000 && out.ok; ++i) {
    PLMap f = random_map(rng, 12);
    PLMap c = random_map(rng, 12);
    std::string tag = " (pair " + std::to_string(i) + ")";
    PLMap fc = conjugate(f, c);
    std::vector<Interval> expected;
    for (const auto& o : orbitals(f)) expected.emplace_back(interpolate(c, o.left()), interpolate(c, o.right()));
    out.require(orbitals(fc) == expected, "orbital images" + tag);
    for (const auto& o : orbitals(f))
      out.require(boundary_slopes(fc, image(o, c)) == boundary_slopes(f, o), "boundary slopes" + tag);

    // A pool of several maps and its towers, before and after conjugation.
    std::vector<PLMap> maps{f, random_map(rng, 8), random_map(rng, 8)};
    std::vector<PLMap> conj;
    for (const auto& m : maps) conj.push_back(conjugate(m, c));
    auto pool = signed_orbitals(maps);
    auto pool_c = signed_orbitals(conj);
    out.require(pool.size() == pool_c.size(), "pool size" + tag);
    if (!out.ok) break;
    std::vector<SignedOrbital> mapped;
    for (const auto& so : pool) mapped.push_back({image(so.orbital, c), conjugate(so.signature, c)});
    out.require(comparison_matrix(pool) == comparison_matrix(mapped), "pool order" + tag);
    for (const auto& t : maximal_towers(pool)) {
      Tower tc = conjugate_tower(t, c);
      out.require(tc.size() == t.size(), "tower size" + tag);
      out.require(comparison_matrix(tc.elements()) == comparison_matrix(t.elements()), "tower order" + tag);
      for (std::size_t k = 0; k < t.size() && out.ok; ++k) {
        out.require(tc[k].orbital == image(t[k].orbital, c), "tower orbital" + tag);
        out.require(is_orbital(tc[k].signature, tc[k].orbital), "tower signature" + tag);
      }
    }
    out.require(maximal_towers(mapped).size() == maximal_towers(pool).size(), "tower count" + tag);
  }
  out.detail = out.ok ? "1000 (f, c) pairs" : out.detail;
  return out;
}

Outcome fundamental() {
  Outcome out;
  std::size_t chains = 0;
  auto check = [&](std::vector<SignedOrbital> chain, const std::string& tag) {
    out.require(is_fundamental(chain), "is_fundamental" + tag);
    ProductCheck pc = product_orbital_check(chain);
    const Interval& top = chain.back().orbital;
    PLMap asc, desc;
    for (const auto& e : chain) asc = compose(asc, e.signature);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) desc = compose(desc, it->signature);
    out.require(pc.ascending_product == asc && pc.descending_product == desc, "products" + tag);
    out.require(pc.verified, "product check" + tag);
    out.require(is_orbital(asc, top) && is_orbital(desc, top), "top orbital of products" + tag);
    ++chains;
  };
  for (unsigned d = 1; d <= 6; ++d) check(nested_tower(d).tower.elements(), " (nested " + std::to_string(d) + ")");
  Rng rng(1003);
  for (int i = 0; i < 500 && out.ok; ++i) {
    FundamentalPair p = random_fundamental_pair(rng);
    check({p.inner, p.outer}, " (pair " + std::to_string(i) + ")");
  }
  out.detail = out.ok ? std::to_string(chains) + " chains" : out.detail;
  return out;
}

using Key = std::tuple<Interval, std::size_t, std::size_t>;

std::optional<Key> brute_force(const std::vector<PLMap>& maps) {
  std::optional<Key> best;
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j)
      for (const auto& x : orbitals(maps[i]))
        for (const auto& y : orbitals(maps[j])) {
          if (interval_relation(x, y) != Relation::Crossing) continue;
          Key k{Interval(std::max(x.left(), y.left()), std::min(x.right(), y.right())), i, j};
          if (!best || k < *best) best = k;
        }
  return best;
}

bool any_crossing(const std::vector<BallElement>& ball) {
  std::vector<std::pair<Interval, std::size_t>> all;
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (const auto& o : orbitals(ball[i].element)) all.emplace_back(o, i);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (interval_relation(all[a].first, all[b].first) == Relation::Crossing) return true;
  return false;
}

Outcome detector() {
  Outcome out;
  Rng rng(1004);
  std::size_t found = 0;
  for (int i = 0; i < 1000 && out.ok; ++i) {
    std::vector<PLMap> maps;
    std::size_t n = 1 + rng.below(5);
    for (std::size_t k = 0; k < n; ++k) maps.push_back(random_map(rng, 8));
    auto expected = brute_force(maps);
    auto got = detect_transition_chain(maps);
    std::string tag = " (set " + std::to_string(i) + ")";
    out.require(got.has_value() == expected.has_value(), "presence" + tag);
    if (got && expected) {
      ++found;
      out.require(Key{got->overlap, got->first_index, got->second_index} == *expected, "certificate" + tag);
      out.require(got->first.signature == maps[got->first_index] && got->second.signature == maps[got->second_index],
                  "certificate signatures" + tag);
    }
  }
  out.require(found > 0 && found < 1000, "random sets did not exercise both outcomes");

  auto [f, g] = crossing_pair();
  ChainSearch cs = search_transition_chain(GenSet{"crossing", {f, g}, {}}, 1);
  out.require(cs.certificate.has_value() && cs.radius == 1, "crossing pair not certified at radius 1");

  std::vector<std::pair<std::string, GenSet>> fixtures;
  for (unsigned d = 1; d <= 6; ++d) fixtures.emplace_back("nested " + std::to_string(d), nested_tower(d).generators);
  fixtures.emplace_back("wreath", wreath_generators(Interval(ratio(5, 16), ratio(3, 8)), Interval(ratio(1, 4), ratio(1, 2))));
  std::size_t elements = 0;
  for (const auto& [name, gens] : fixtures) {
    ChainSearch s = search_transition_chain(gens, 3);
    auto ball = word_ball(gens, 3, kDefaultElementCap);
    out.require(!s.certificate.has_value(), name + " reported a chain");
    out.require(s.radius == 3 && s.elements == ball.size(), name + " ball not fully enumerated");
    out.require(!any_crossing(ball), name + " brute force found a chain");
    elements += ball.size();
  }
  out.detail = out.ok ? "1000 sets, " + std::to_string(found) + " with chains; " + std::to_string(elements) +
                            " ball elements scanned"
                      : out.detail;
  return out;
}

Outcome witnesses() {
  Outcome out;
  Rng rng(1005);
  const std::vector<WitnessChoice> choices{{0, ratio(1, 2)}, {1, ratio(1, 3)}, {2, ratio(3, 4)}, {5, ratio(1, 7)}};
  for (int i = 0; i < 100 && out.ok; ++i) {
    Tower t = random_tower(rng, 1 + rng.below(6));
    std::string tag = " (tower " + std::to_string(i) + ")";
    out.require(!detect_transition_chain(t.signatures()).has_value(), "tower has a chain" + tag);
    for (const auto& choice : choices) {
      auto w = witness_intervals(t, choice);
      out.require(w.size() == t.size(), "witness count" + tag);
      for (std::size_t a = 0; a < w.size(); ++a) {
        out.require(is_subset(w[a], t[a].orbital), "witness outside orbital" + tag);
        for (std::size_t b = a + 1; b < w.size(); ++b)
          out.require(interval_relation(w[a], w[b]) == Relation::Disjoint, "witnesses meet" + tag);
      }
    }
  }
  out.detail = out.ok ? "100 towers x 4 choices" : out.detail;
  return out;
}

Outcome length_partition() {
  Outcome out;
  std::set<Rat> grid;
  Rat p = 1;
  std::vector<Rat> powers;
  for (int k = 0; k <= 20; ++k) {
    powers.push_back(p);
    grid.insert(p);
    Rat eps = p / 1000000;
    grid.insert(p + eps);
    grid.insert(p - eps);
    p *= ratio(2, 3);
  }
  grid.erase(grid.upper_bound(Rat(1)), grid.end());
  for (long d = 1; grid.size() < 10000; ++d)
    for (long n = 1; n <= d && grid.size() < 10000; ++n) grid.insert(ratio(n, d));
  for (const Rat& len : grid) {
    LengthClass c = length_class(len);
    // Reference class from the exact powers (2/3)^k.
    unsigned expected = 0;
    Rat hi = 1;
    for (unsigned n = 1; n < 1000; ++n) {
      Rat lo = hi * ratio(2, 3);
      if (lo < len && len <= hi) {
        expected = n;
        break;
      }
      hi = lo;
    }
    out.require(c.index == expected, "class of " + to_string(len));
    out.require(c.contains(len) && !LengthClass{c.index + 1}.contains(len) &&
                    (c.index == 1 || !LengthClass{c.index - 1}.contains(len)),
                "class bounds at " + to_string(len));
  }
  for (std::size_t k = 0; k < powers.size(); ++k)
    out.require(length_class(powers[k]).index == k + 1, "boundary (2/3)^" + std::to_string(k));
  std::size_t points = grid.size();

  // Two disjoint subintervals of O in O's own class would violate the
  // half-length bound. Search every O and pair on a grid of 48ths.
  const long den = 48;
  std::size_t counterexamples = 0;
  for (long l = 0; l < den; ++l)
    for (long r = l + 1; r <= den; ++r) {
      Interval o(ratio(l, den), ratio(r, den));
      unsigned cls = length_class(o).index;
      std::vector<Interval> same;
      for (long a = l; a < r; ++a)
        for (long b = a + 1; b <= r; ++b)
          if (length_class(ratio(b - a, den)).index == cls) same.emplace_back(ratio(a, den), ratio(b, den));
      for (std::size_t i = 0; i < same.size(); ++i)
        for (std::size_t j = i + 1; j < same.size(); ++j) {
          if (interval_relation(same[i], same[j]) == Relation::Disjoint) ++counterexamples;
        }
      for (const auto& a : same) out.require(3 * length(a) > 2 * length(o), "class member below 2/3 of O");
    }
  out.require(counterexamples == 0, std::to_string(counterexamples) + " half-length counterexamples");
  out.detail = out.ok ? std::to_string(points) + " grid lengths, 0 counterexamples over 1176 orbitals" : out.detail;
  return out;
}

Outcome duality() {
  Outcome out;
  Rng rng(1007);
  std::size_t bounces = 0, cornered = 0;
  for (int i = 0; i < 1000 && out.ok; ++i) {
    PLMap f = random_map(rng, 8);
    PLMap g;
    switch (rng.below(3)) {
      case 0: g = random_map(rng, 8); break;
      case 1: g = compose(f, random_bump_on(rng, random_interval(rng))); break;
      default: g = compose(random_bump_on(rng, random_interval(rng)), f);
    }
    std::string tag = " (pair " + std::to_string(i) + ")";
    for (const Rat& b : bouncepoints(f, g)) {
      ++bounces;
      out.require(evaluate(f, b) == evaluate(g, b) && right_slope(f, b) != right_slope(g, b), "bouncepoint shape" + tag);
      out.require(is_breakpoint(f, b) || is_breakpoint(g, b), "bouncepoint off breakpoints" + tag);
      out.require(endpoint_witness(b, f, g), "bouncepoint " + to_string(b) + " has no witness" + tag);
    }
    for (const Rat& b : corners(f, g)) {
      ++cornered;
      out.require(evaluate(f, b) == evaluate(g, b) && right_slope(f, b) != right_slope(g, b), "corner shape" + tag);
      out.require(!is_breakpoint(f, b) && !is_breakpoint(g, b), "corner on a breakpoint" + tag);
      out.require(endpoint_witness(b, f, g), "corner " + to_string(b) + " has no witness" + tag);
    }
  }
  out.require(bounces > 0 && cornered > 0, "pairs produced no bouncepoints or no corners");
  auto [f, g] = crossing_pair();
  out.require(corners(f, g) == std::vector<Rat>{ratio(7, 12)}, "crossing pair corner is not 7/12");
  out.detail = out.ok ? std::to_string(bounces) + " bouncepoints, " + std::to_string(cornered) + " corners" : out.detail;
  return out;
}

Outcome injectivity() {
  Outcome out;
  Rng rng(1008);
  Interval whole(Rat(0), Rat(1));
  auto bumps = random_bump_family(rng, whole, 200);
  std::set<PLMap> distinct(bumps.begin(), bumps.end());
  out.require(distinct.size() == 200, "bumps not pairwise distinct");
  for (const auto& b : bumps) out.require(orbitals(b) == std::vector<Interval>{whole}, "bump with another orbital");
  InjectivityReport r = check_injectivity(bumps, whole);
  std::set<BumpCode> codes(r.codes.begin(), r.codes.end());
  std::size_t with_steps = 0;
  for (const auto& c : r.codes) with_steps += c.steps.empty() ? 0 : 1;
  out.require(r.total == 200 && r.distinct_codes == 200 && codes.size() == 200, "distinct codes: " + std::to_string(codes.size()));
  out.require(r.collisions.empty(), std::to_string(r.collisions.size()) + " collisions");
  out.detail = out.ok ? "200 bumps, 200 codes (" + std::to_string(with_steps) + " with bouncepoints)" : out.detail;
  return out;
}

Outcome wreath() {
  Outcome out;
  auto I = [](long a, long b, long c, long d) { return Interval(ratio(a, b), ratio(c, d)); };
  std::vector<std::pair<Interval, Interval>> fixtures{
      {I(5, 16, 3, 8), I(1, 4, 1, 2)}, {I(1, 4, 1, 2), I(0, 1, 1, 1)}, {I(1, 8, 7, 8), I(0, 1, 1, 1)},
      {I(0, 1, 1, 2), I(0, 1, 1, 1)},  {I(1, 2, 1, 1), I(1, 4, 1, 1)}, {I(1, 3, 2, 3), I(1, 6, 5, 6)}};
  std::size_t pairs = 0;
  for (const auto& [inner, outer] : fixtures) {
    GenSet g = wreath_generators(inner, outer);
    const PLMap& h = g.generators[0];
    const PLMap& f = g.generators[1];
    std::vector<PLMap> conj;
    for (long i = -3; i <= 3; ++i) conj.push_back(conjugate(h, power(f, i)));
    for (std::size_t i = 0; i < conj.size(); ++i)
      for (std::size_t j = 0; j < conj.size(); ++j) {
        if (i == j) continue;
        ++pairs;
        out.require(compose(conj[i], conj[j]) == compose(conj[j], conj[i]),
                    "h^f^" + std::to_string(long(i) - 3) + " and h^f^" + std::to_string(long(j) - 3) +
                        " do not commute for " + to_string(inner));
      }
    out.require(!conj[3].is_identity() && conj[3] != conj[4], "degenerate fixture " + to_string(inner));
  }
  out.detail = out.ok ? std::to_string(fixtures.size()) + " fixtures, " + std::to_string(pairs) + " ordered pairs" : out.detail;
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

Outcome io_determinism() {
  Outcome out;
  std::size_t files = 0, maps = 0;
  for (const auto& entry : std::filesystem::directory_iterator(PLO_FIXTURE_DIR)) {
    ++files;
    std::string name = entry.path().filename().string();
    GenSet g = parse_genset(slurp(entry.path()));
    std::string text = genset_to_text(g);
    GenSet from_text = parse_genset(text);
    GenSet from_json = parse_genset(genset_to_json(g).dump(2));
    out.require(from_text.generators == g.generators && from_json.generators == g.generators, "round trip of " + name);
    out.require(genset_to_text(from_text) == text && genset_to_text(from_json) == text, "text not stable for " + name);
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      ++maps;
      out.require(parse_map(serialize_map(g.generators[i])) == g.generators[i], "map round trip in " + name);
      out.require(from_json.label(i) == g.label(i), "label lost in " + name);
    }
  }
  out.require(files > 0, "empty fixture corpus");

  std::string first = run_verify(known_suites(), 42, 100).to_json().dump(2);
  std::string second = run_verify(known_suites(), 42, 100).to_json().dump(2);
  out.require(first == second, "library verify report differs between runs");

  std::string cmd = std::string("\"") + PLO_CLI + "\" verify --seed 42 --format json";
  std::string run1 = run_command(cmd);
  std::string run2 = run_command(cmd);
  out.require(!run1.empty() && run1 == run2, "CLI verify output differs between runs");
  out.require(Json::parse(run1, nullptr, false).value("passed", false), "CLI verify did not pass");
  out.detail = out.ok ? std::to_string(files) + " fixture files, " + std::to_string(maps) + " maps; verify output " +
                            std::to_string(run1.size()) + " bytes, identical"
                      : out.detail;
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact group algebra", 10, group_algebra},
      {2, "conjugation: orbitals, towers, boundary slopes", 30, conjugation},
      {3, "fundamental towers and product orbitals", 30, fundamental},
      {4, "transition-chain detector vs brute force", 60, detector},
      {5, "disjoint witness intervals", 30, witnesses},
      {6, "length classes and half-length forcing", 30, length_partition},
      {7, "bouncepoint/corner duality", 30, duality},
      {8, "bump code injectivity", 30, injectivity},
      {9, "wreath commutation", 10, wreath},
      {10, "IO determinism", 10, io_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_seconds;
    bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << "  [" << timing << "]  "
              << (in_time ? o.detail : o.detail + "; over time limit") << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
