#include "plo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "plo/constructions.hpp"
#include "plo/error.hpp"
#include "plo/random.hpp"

namespace plo {

namespace {

class Suite {
 public:
  explicit Suite(std::string name, Report& report) : name_(std::move(name)), report_(report) {}

  // Records one case of `check`; `describe` is only invoked on failure.
  void expect(const std::string& check, bool ok, const std::function<std::string()>& describe) {
    CheckResult& r = slot(check);
    ++r.cases;
    if (!ok) {
      if (r.failures == 0) r.first_failure = describe();
      ++r.failures;
    }
  }

 private:
  CheckResult& slot(const std::string& check) {
    auto it = index_.find(check);
    if (it != index_.end()) return report_.checks[it->second];
    index_[check] = report_.checks.size();
    report_.checks.push_back({name_, check, 0, 0, {}});
    return report_.checks.back();
  }

  std::string name_;
  Report& report_;
  std::map<std::string, std::size_t> index_;
};

std::string describe_maps(std::initializer_list<const PLMap*> maps) {
  std::string out;
  for (const PLMap* f : maps) out += (out.empty() ? "[" : " | [") + serialize_map(*f) + "]";
  return out;
}

std::vector<Rat> sample_points(Rng& rng, std::size_t count) {
  std::vector<Rat> out{Rat(0), Rat(1)};
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_unit_rat(rng));
  return out;
}

void group_axioms(Suite& s, Rng& rng, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    PLMap f = random_map(rng), g = random_map(rng), h = random_map(rng);
    auto d = [&] { return describe_maps({&f, &g, &h}); };
    s.expect("associativity", compose(compose(f, g), h) == compose(f, compose(g, h)), d);
    s.expect("inverse", compose(f, invert(f)).is_identity() && compose(invert(f), f).is_identity(), d);
    s.expect("identity", compose(PLMap::identity(), f) == f && compose(f, PLMap::identity()) == f, d);
    long m = static_cast<long>(rng.below(7)) - 3, n = static_cast<long>(rng.below(7)) - 3;
    s.expect("power-additivity", power(f, m + n) == compose(power(f, m), power(f, n)), d);
    bool pointwise = true;
    for (const auto& x : sample_points(rng, 4)) pointwise = pointwise && evaluate(compose(f, g), x) == evaluate(g, evaluate(f, x));
    s.expect("right-action", pointwise, d);
    s.expect("canonical-form", make_map(f.nodes()) == f, d);
  }
}

void conjugation(Suite& s, Rng& rng, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    PLMap g = random_map(rng), c = random_map(rng);
    PLMap gc = conjugate(g, c);
    auto d = [&] { return describe_maps({&g, &c}); };
    std::vector<Interval> expected;
    for (const auto& a : orbitals(g)) expected.push_back(image(a, c));
    s.expect("orbital-images", orbitals(gc) == expected, d);
    bool slopes = true;
    for (const auto& a : orbitals(g)) slopes = slopes && boundary_slopes(g, a) == boundary_slopes(gc, image(a, c));
    s.expect("boundary-slopes", slopes, d);

    Tower t = random_tower(rng, 1 + rng.below(4));
    Tower tc = conjugate_tower(t, c);
    s.expect("tower-order-isomorphism",
             tc.size() == t.size() && comparison_matrix(tc.elements()) == comparison_matrix(t.elements()), d);
  }
}

void fundamental(Suite& s, Rng& rng, std::size_t size) {
  for (unsigned depth = 1; depth <= 6; ++depth) {
    auto nt = nested_tower(depth);
    auto d = [&] { return "nested_tower(" + std::to_string(depth) + ")"; };
    s.expect("towers-fundamental", is_fundamental(nt.tower.elements()), d);
    s.expect("product-orbital", product_orbital_check(nt.tower.elements()).verified, d);
  }
  for (std::size_t i = 0; i < size; ++i) {
    auto pair = random_fundamental_pair(rng);
    std::vector<SignedOrbital> pool{pair.inner, pair.outer};
    auto d = [&] { return describe_maps({&pair.inner.signature, &pair.outer.signature}); };
    s.expect("pairs-fundamental", is_fundamental(pool), d);
    s.expect("product-orbital", product_orbital_check(pool).verified, d);
  }
}

void transition_chains(Suite& s, Rng& rng, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<PLMap> maps;
    std::size_t count = 1 + rng.below(4);
    for (std::size_t k = 0; k < count; ++k)
      maps.push_back(rng.coin() ? random_bump_on(rng, random_interval(rng)) : random_map(rng, 6));
    auto sos = signed_orbitals(maps);
    bool crossing = false;
    for (std::size_t p = 0; p < sos.size() && !crossing; ++p)
      for (std::size_t q = p + 1; q < sos.size() && !crossing; ++q)
        crossing = interval_relation(sos[p].orbital, sos[q].orbital) == Relation::Crossing;
    auto cert = detect_transition_chain(maps);
    s.expect("detector-matches-pair-scan", cert.has_value() == crossing, [&] {
      std::string out;
      for (const auto& m : maps) out += "[" + serialize_map(m) + "] ";
      return out;
    });
    if (cert)
      s.expect("certificate-rechecks",
               interval_relation(cert->first.orbital, cert->second.orbital) == Relation::Crossing &&
                   intersection(cert->first.orbital, cert->second.orbital) == cert->overlap &&
                   is_orbital(cert->first.signature, cert->first.orbital) &&
                   is_orbital(cert->second.signature, cert->second.orbital),
               [] { return std::string("certificate does not re-verify"); });
  }
  auto [f, g] = crossing_pair();
  auto found = search_transition_chain({"crossing", {f, g}, {}}, 1);
  s.expect("crossing-pair-radius-1", found.certificate.has_value() && found.radius == 1,
           [] { return std::string("crossing_pair not certified at radius 1"); });
  for (unsigned depth = 1; depth <= 3; ++depth) {
    auto nt = nested_tower(depth);
    s.expect("nested-none-within-radius-3", !search_transition_chain(nt.generators, 3).certificate.has_value(),
             [&] { return "nested_tower(" + std::to_string(depth) + ")"; });
  }
}

void witness(Suite& s, Rng& rng, std::size_t size) {
  const std::vector<WitnessChoice> choices{{0, ratio(1, 2)}, {1, ratio(1, 3)}, {99, ratio(3, 4)}, {2, ratio(1, 5)}};
  for (std::size_t i = 0; i < size; ++i) {
    Tower t = random_tower(rng, 1 + rng.below(6));
    for (const auto& choice : choices) {
      auto w = witness_intervals(t, choice);
      bool disjoint = true;
      for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t q = p + 1; q < w.size(); ++q)
          disjoint = disjoint && interval_relation(w[p], w[q]) == Relation::Disjoint;
      bool inside = w.size() == t.size();
      for (std::size_t p = 0; p < w.size() && inside; ++p) inside = is_subset(w[p], t[p].orbital);
      auto d = [&] {
        std::string out = "tower";
        for (const auto& e : t.elements()) out += " " + to_string(e.orbital) + " [" + serialize_map(e.signature) + "]";
        return out;
      };
      s.expect("witness-disjoint", disjoint, d);
      s.expect("witness-inside-orbital", inside, d);
    }
  }
}

void length_partition(Suite& s, Rng& rng, std::size_t size) {
  std::vector<Rat> lengths;
  Rat p(1);
  for (unsigned k = 0; k <= 20; ++k) {
    lengths.push_back(p);
    p *= ratio(2, 3);
  }
  for (std::size_t i = 0; i < size; ++i) lengths.push_back(random_unit_rat(rng));
  for (const auto& len : lengths) {
    LengthClass c = length_class(len);
    s.expect("class-bounds", c.lower() < len && len <= c.upper(), [&] { return "length " + to_string(len); });
  }
  // Two disjoint subintervals of o never share o's class.
  const long n = 12;
  for (long a = 0; a < n; ++a)
    for (long b = a + 1; b <= n; ++b)
      for (long c = b; c < n; ++c)
        for (long e = c + 1; e <= n; ++e) {
          Interval first(ratio(a, n), ratio(b, n)), second(ratio(c, n), ratio(e, n));
          Interval o(ratio(a, n), ratio(e, n));
          Rat shorter = std::min(first.length(), second.length());
          bool ok = 2 * shorter <= o.length() && length_class(shorter) != length_class(o);
          s.expect("half-length-forcing", ok, [&] { return to_string(first) + " " + to_string(second); });
        }
}

void bounce(Suite& s, Rng& rng, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    PLMap f = random_map(rng, 8), g = random_map(rng, 8);
    if (rng.coin()) {
      // Force agreement on a prefix so bouncepoints actually occur.
      std::vector<Node> nodes;
      Rat cut = random_unit_rat(rng);
      for (const auto& n : f.nodes())
        if (n.x <= cut) nodes.push_back(n);
      Rat y_cut = evaluate(f, cut);
      if (nodes.back().x != cut) nodes.push_back({cut, y_cut});
      Rat x = cut + (1 - cut) / 2;
      nodes.push_back({x, y_cut + (1 - y_cut) * ratio(1, 3)});
      nodes.push_back({Rat(1), Rat(1)});
      g = make_map(std::move(nodes));
    }
    auto d = [&] { return describe_maps({&f, &g}); };
    auto bps = bouncepoints(f, g);
    auto cs = corners(f, g);
    bool witnessed = true;
    for (const auto& b : bps) witnessed = witnessed && endpoint_witness(b, f, g);
    for (const auto& b : cs) witnessed = witnessed && endpoint_witness(b, f, g);
    s.expect("endpoint-witness", witnessed, d);

    std::vector<Rat> starts;
    for (const auto& a : orbitals(compose(f, invert(g))))
      if (a.left() > 0) starts.push_back(a.left());
    std::vector<Rat> both;
    std::merge(bps.begin(), bps.end(), cs.begin(), cs.end(), std::back_inserter(both));
    s.expect("trichotomy-exhaustive", both == starts, d);
  }
  auto [f, g] = crossing_pair();
  s.expect("crossing-pair-corner", corners(f, g) == std::vector<Rat>{ratio(7, 12)},
           [] { return std::string("crossing pair corners differ from 7/12"); });
}

void phi_injectivity(Suite& s, Rng& rng, std::size_t size) {
  Interval o(Rat(0), Rat(1));
  auto family = random_bump_family(rng, o, size);
  auto report = check_injectivity(family, o);
  s.expect("distinct-codes", report.distinct_codes == family.size(), [&] {
    return std::to_string(report.distinct_codes) + " codes for " + std::to_string(family.size()) + " bumps";
  });
  s.expect("no-collisions", report.collisions.empty(), [&] {
    return "collision between bumps " + std::to_string(report.collisions.front().first) + " and " +
           std::to_string(report.collisions.front().second);
  });
}

void wreath(Suite& s, Rng& rng, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    Interval outer = random_interval(rng);
    Interval inner = random_subinterval(rng, outer);
    if (inner == outer) continue;
    GenSet g = wreath_generators(inner, outer);
    const PLMap& h = g.generators[0];
    const PLMap& f = g.generators[1];
    std::vector<PLMap> conj;
    for (long k = -3; k <= 3; ++k) conj.push_back(conjugate(h, power(f, k)));
    bool commute = true;
    for (std::size_t p = 0; p < conj.size(); ++p)
      for (std::size_t q = p + 1; q < conj.size(); ++q) commute = commute && commutator(conj[p], conj[q]).is_identity();
    s.expect("conjugates-commute", commute, [&] { return describe_maps({&h, &f}); });
    s.expect("group-orbital", group_orbitals(g) == std::vector<Interval>{outer}, [&] { return describe_maps({&h, &f}); });
  }
}

void io_roundtrip(Suite& s, Rng& rng, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    PLMap f = random_map(rng);
    auto d = [&] { return describe_maps({&f}); };
    s.expect("text-roundtrip", parse_map(serialize_map(f)) == f, d);
    s.expect("json-roundtrip", map_document_from_json(to_json(MapDocument{"f", f})).map == f, d);
  }
}

void shared_ends(Suite& s, Rng&, std::size_t) {
  for (unsigned depth = 1; depth <= 3; ++depth) {
    auto nt = nested_tower(depth);
    auto ball = word_ball(nt.generators, 2, kDefaultElementCap);
    std::vector<Interval> all;
    for (const auto& e : ball)
      for (const auto& a : orbitals(e.element)) all.push_back(a);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    bool ok = true;
    for (std::size_t p = 0; p < all.size(); ++p)
      for (std::size_t q = p + 1; q < all.size(); ++q) {
        auto r = interval_relation(all[p], all[q]);
        if ((r == Relation::ProperSub || r == Relation::ProperSup) && shares_end(all[p], all[q])) ok = false;
      }
    s.expect("no-shared-ends", ok, [&] { return "nested_tower(" + std::to_string(depth) + ") ball of radius 2"; });
  }
}

using SuiteFn = void (*)(Suite&, Rng&, std::size_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"group-axioms", group_axioms},   {"conjugation", conjugation},
      {"fundamental", fundamental},     {"transition-chains", transition_chains},
      {"witness", witness},             {"length-partition", length_partition},
      {"bouncepoints", bounce},         {"phi-injectivity", phi_injectivity},
      {"wreath", wreath},               {"io-roundtrip", io_roundtrip},
      {"shared-ends", shared_ends},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool Report::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

Json Report::to_json() const {
  Json j;
  j["seed"] = seed;
  j["size"] = size;
  j["suites"] = suites;
  j["passed"] = passed();
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json cj;
    cj["suite"] = c.suite;
    cj["check"] = c.check;
    cj["cases"] = c.cases;
    cj["failures"] = c.failures;
    cj["passed"] = c.passed();
    if (!c.passed()) cj["first_failure"] = c.first_failure;
    checks_json.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks_json);
  bool timed = std::any_of(suite_seconds.begin(), suite_seconds.end(), [](const auto& t) { return t.has_value(); });
  if (timed) {
    Json t;
    for (std::size_t i = 0; i < suites.size() && i < suite_seconds.size(); ++i)
      if (suite_seconds[i]) t[suites[i]] = *suite_seconds[i];
    j["seconds"] = std::move(t);
  }
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "seed " << seed << ", size " << size << "\n";
  for (const auto& c : checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.suite << "/" << c.check << " (" << c.cases << " cases";
    if (!c.passed()) os << ", " << c.failures << " failed; first: " << c.first_failure;
    os << ")\n";
  }
  for (std::size_t i = 0; i < suites.size() && i < suite_seconds.size(); ++i)
    if (suite_seconds[i]) os << "time " << suites[i] << " " << *suite_seconds[i] << " s\n";
  os << (passed() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

Report run_verify(const std::vector<std::string>& suites, std::uint64_t seed, std::size_t size, bool timings) {
  const auto& reg = registry();
  std::vector<std::size_t> ids;
  for (const auto& name : suites) {
    auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& entry) { return entry.first == name; });
    if (it == reg.end()) throw Error(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
    ids.push_back(static_cast<std::size_t>(it - reg.begin()));
  }
  Report report;
  report.seed = seed;
  report.size = size;
  report.suites = suites;
  for (std::size_t id : ids) {
    // Each suite draws from its own stream so adding a suite to the run does
    // not shift the fixtures of the others.
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + id);
    Suite suite(reg[id].first, report);
    auto start = std::chrono::steady_clock::now();
    reg[id].second(suite, rng, size);
    std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    report.suite_seconds.push_back(timings ? std::optional<double>(took.count()) : std::nullopt);
  }
  return report;
}

}  // namespace plo
