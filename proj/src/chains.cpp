#include "plo/chains.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

#include "plo/error.hpp"

namespace plo {

Tower::Tower(std::vector<SignedOrbital> elements) : elements_(std::move(elements)) {
  std::stable_sort(elements_.begin(), elements_.end(),
                   [](const SignedOrbital& p, const SignedOrbital& q) { return p.orbital.length() < q.orbital.length(); });
  for (std::size_t i = 1; i < elements_.size(); ++i)
    if (interval_relation(elements_[i - 1].orbital, elements_[i].orbital) != Relation::ProperSub)
      throw Error(ErrorKind::NotNested, to_string(elements_[i - 1].orbital) + " and " + to_string(elements_[i].orbital) +
                                            " are not strictly nested");
}

std::vector<PLMap> Tower::signatures() const {
  std::vector<PLMap> out;
  for (const auto& e : elements_) out.push_back(e.signature);
  return out;
}

std::vector<Interval> Tower::stack() const {
  std::vector<Interval> out;
  for (const auto& e : elements_) out.push_back(e.orbital);
  return out;
}

const char* to_string(Order o) noexcept {
  switch (o) {
    case Order::Less: return "Less";
    case Order::Greater: return "Greater";
    case Order::Equal: return "Equal";
    case Order::Incomparable: return "Incomparable";
  }
  return "?";
}

std::vector<SignedOrbital> signed_orbitals(std::span<const PLMap> maps) {
  std::vector<SignedOrbital> out;
  for (const auto& f : maps)
    for (auto& a : orbitals(f)) out.push_back({std::move(a), f});
  return out;
}

Order compare_signed(const SignedOrbital& p, const SignedOrbital& q) {
  switch (interval_relation(p.orbital, q.orbital)) {
    case Relation::ProperSub: return Order::Less;
    case Relation::ProperSup: return Order::Greater;
    case Relation::Equal: return p.signature == q.signature ? Order::Equal : Order::Incomparable;
    default: return Order::Incomparable;
  }
}

std::vector<Interval> downset(const Interval& a, std::span<const Interval> pool) {
  std::vector<Interval> out;
  for (const auto& b : pool)
    if (interval_relation(b, a) == Relation::ProperSub) out.push_back(b);
  return out;
}

std::vector<Interval> upset(const Interval& a, std::span<const Interval> pool) {
  std::vector<Interval> out;
  for (const auto& b : pool)
    if (interval_relation(b, a) == Relation::ProperSup) out.push_back(b);
  return out;
}

bool is_stack(std::span<const Interval> pool) {
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      auto r = interval_relation(pool[i], pool[j]);
      if (r == Relation::Disjoint || r == Relation::Crossing) return false;
    }
  return true;
}

namespace {

bool tower_less(const Tower& a, const Tower& b) {
  if (a.size() == 0 || b.size() == 0) return a.size() < b.size();
  if (a[0].orbital != b[0].orbital) return a[0].orbital < b[0].orbital;
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].orbital != b[i].orbital) return a[i].orbital < b[i].orbital;
    if (a[i].signature != b[i].signature) return a[i].signature < b[i].signature;
  }
  return false;
}

}  // namespace

std::vector<Tower> maximal_towers(std::span<const SignedOrbital> pool) {
  std::vector<SignedOrbital> items;
  for (const auto& p : pool)
    if (std::none_of(items.begin(), items.end(), [&](const SignedOrbital& q) { return compare_signed(p, q) == Order::Equal; }))
      items.push_back(p);

  // Maximal chains of a finite poset are the maximal paths of its covering
  // relation, running from a minimal to a maximal element.
  const std::size_t n = items.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) less[i][j] = compare_signed(items[i], items[j]) == Order::Less;

  std::vector<std::vector<std::size_t>> covers(n);
  std::vector<bool> has_below(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!less[i][j]) continue;
      has_below[j] = true;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (less[i][k] && less[k][j]) direct = false;
      if (direct) covers[i].push_back(j);
    }

  std::vector<Tower> out;
  std::vector<std::size_t> path;
  auto walk = [&](auto&& self, std::size_t at) -> void {
    path.push_back(at);
    if (covers[at].empty()) {
      std::vector<SignedOrbital> chain;
      for (auto idx : path) chain.push_back(items[idx]);
      out.emplace_back(std::move(chain));
    }
    for (auto next : covers[at]) self(self, next);
    path.pop_back();
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!has_below[i]) walk(walk, i);

  std::sort(out.begin(), out.end(), tower_less);
  return out;
}

bool is_fundamental(std::span<const SignedOrbital> pool) {
  for (const auto& a : pool)
    for (const auto& b : pool)
      if (interval_relation(a.orbital, b.orbital) == Relation::ProperSub && !lies_in_fundamental_domain(a.orbital, b))
        return false;
  return true;
}

Tower conjugate_tower(const Tower& t, const PLMap& c) {
  std::vector<SignedOrbital> out;
  for (const auto& e : t.elements()) out.push_back({image(e.orbital, c), conjugate(e.signature, c)});
  return Tower(std::move(out));
}

std::vector<Order> comparison_matrix(std::span<const SignedOrbital> elements) {
  std::vector<Order> out;
  out.reserve(elements.size() * elements.size());
  for (const auto& p : elements)
    for (const auto& q : elements) out.push_back(compare_signed(p, q));
  return out;
}

ProductCheck product_orbital_check(std::span<const SignedOrbital> chain) {
  if (chain.empty()) throw Error(ErrorKind::PreconditionViolated, "empty chain");
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (interval_relation(chain[i - 1].orbital, chain[i].orbital) != Relation::ProperSub)
      throw Error(ErrorKind::PreconditionViolated,
                  "orbitals " + to_string(chain[i - 1].orbital) + " and " + to_string(chain[i].orbital) +
                      " are not strictly ascending");
  for (const auto& e : chain)
    if (!is_orbital(e.signature, e.orbital))
      throw Error(ErrorKind::NotAnOrbital, to_string(e.orbital) + " is not an orbital of its signature");
  std::vector<PLMap> sigs;
  for (const auto& e : chain) sigs.push_back(e.signature);
  if (auto cert = detect_transition_chain(sigs))
    throw Error(ErrorKind::PreconditionViolated, "signatures form a transition chain over " + to_string(cert->overlap));

  ProductCheck out;
  for (const auto& s : sigs) out.ascending_product = compose(out.ascending_product, s);
  for (auto it = sigs.rbegin(); it != sigs.rend(); ++it) out.descending_product = compose(out.descending_product, *it);
  const Interval& top = chain.back().orbital;
  out.verified = is_orbital(out.ascending_product, top) && is_orbital(out.descending_product, top);
  return out;
}

namespace {

struct Tagged {
  SignedOrbital so;
  std::size_t index;
};

auto certificate_key(const ChainCertificate& c) {
  return std::tie(c.overlap.left(), c.overlap.right());
}

bool certificate_less(const ChainCertificate& a, const ChainCertificate& b) {
  if (certificate_key(a) != certificate_key(b)) return certificate_key(a) < certificate_key(b);
  if (a.first_index != b.first_index) return a.first_index < b.first_index;
  if (a.second_index != b.second_index) return a.second_index < b.second_index;
  if (a.first.orbital != b.first.orbital) return a.first.orbital < b.first.orbital;
  return a.second.orbital < b.second.orbital;
}

std::optional<ChainCertificate> detect_tagged(std::vector<Tagged> items) {
  // Sweep by left end: only intervals still open at the current left end can
  // overlap the current one.
  std::stable_sort(items.begin(), items.end(),
                   [](const Tagged& a, const Tagged& b) { return a.so.orbital.left() < b.so.orbital.left(); });
  std::optional<ChainCertificate> best;
  std::vector<const Tagged*> active;
  for (const auto& cur : items) {
    std::erase_if(active, [&](const Tagged* t) { return t->so.orbital.right() <= cur.so.orbital.left(); });
    for (const Tagged* prev : active) {
      if (interval_relation(prev->so.orbital, cur.so.orbital) != Relation::Crossing) continue;
      const Tagged* lo = prev->index <= cur.index ? prev : &cur;
      const Tagged* hi = lo == prev ? &cur : prev;
      ChainCertificate c{lo->so, hi->so, *intersection(lo->so.orbital, hi->so.orbital), lo->index, hi->index};
      if (!best || certificate_less(c, *best)) best = std::move(c);
    }
    active.push_back(&cur);
  }
  return best;
}

}  // namespace

std::optional<ChainCertificate> detect_transition_chain(std::span<const PLMap> maps) {
  std::vector<Tagged> items;
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (auto& a : orbitals(maps[i])) items.push_back({{std::move(a), maps[i]}, i});
  return detect_tagged(std::move(items));
}

namespace {

// Grows the ball one word length at a time, keeping only the first word
// reaching each element. Extending a later word for an element already seen
// only reaches elements that the earlier, no longer word also reaches.
class BallBuilder {
 public:
  BallBuilder(const GenSet& g, std::size_t cap) : cap_(cap) {
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      letters_.push_back(static_cast<int>(k + 1));
      letter_maps_.push_back(g.generators[k]);
      letters_.push_back(-static_cast<int>(k + 1));
      letter_maps_.push_back(invert(g.generators[k]));
    }
    admit({}, PLMap::identity());
  }

  void grow() {
    std::size_t level_end = elements_.size();
    for (std::size_t i = level_begin_; i < level_end; ++i) {
      for (std::size_t l = 0; l < letters_.size(); ++l) {
        if (!elements_[i].word.empty() && elements_[i].word.back() == -letters_[l]) continue;
        Word next = elements_[i].word;
        next.push_back(letters_[l]);
        PLMap e = compose(elements_[i].element, letter_maps_[l]);
        admit(std::move(next), std::move(e));
      }
    }
    level_begin_ = level_end;
  }

  const std::vector<BallElement>& elements() const noexcept { return elements_; }
  std::vector<BallElement> take() && { return std::move(elements_); }

 private:
  void admit(Word w, PLMap e) {
    if (seen_.contains(e)) return;
    if (elements_.size() >= cap_)
      throw Error(ErrorKind::ResourceLimit, "word ball exceeds the cap of " + std::to_string(cap_) + " elements");
    seen_.insert(e);
    elements_.push_back({std::move(w), std::move(e)});
  }

  std::size_t cap_;
  std::vector<int> letters_;
  std::vector<PLMap> letter_maps_;
  std::vector<BallElement> elements_;
  std::unordered_set<PLMap, PLMapHash> seen_;
  std::size_t level_begin_ = 0;
};

}  // namespace

std::vector<BallElement> word_ball(const GenSet& g, std::size_t radius, std::size_t cap) {
  BallBuilder ball(g, cap);
  for (std::size_t len = 1; len <= radius; ++len) ball.grow();
  return std::move(ball).take();
}

ChainSearch search_transition_chain(const GenSet& g, std::size_t radius, std::size_t cap) {
  if (radius == 0) throw Error(ErrorKind::PreconditionViolated, "radius must be at least 1");
  ChainSearch result;
  BallBuilder ball(g, cap);
  std::vector<Tagged> items;
  for (std::size_t r = 1; r <= radius; ++r) {
    std::size_t before = ball.elements().size();
    ball.grow();
    const auto& elems = ball.elements();
    for (std::size_t i = before; i < elems.size(); ++i)
      for (auto& a : orbitals(elems[i].element)) items.push_back({{std::move(a), elems[i].element}, i});
    result.radius = r;
    result.elements = elems.size();
    if (auto cert = detect_tagged(items)) {
      result.first_word = elems[cert->first_index].word;
      result.second_word = elems[cert->second_index].word;
      result.certificate = std::move(cert);
      return result;
    }
  }
  return result;
}

}  // namespace plo
