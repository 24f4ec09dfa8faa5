#pragma once

#include <optional>
#include <span>
#include <vector>

#include "plo/orbital.hpp"

namespace plo {

// A chain of signed orbitals under strict inclusion, smallest orbital first.
class Tower {
 public:
  // Sorts by inclusion; throws Error(NotNested) unless the orbitals form a
  // strict chain.
  explicit Tower(std::vector<SignedOrbital> elements);

  const std::vector<SignedOrbital>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const SignedOrbital& operator[](std::size_t i) const { return elements_[i]; }

  std::vector<PLMap> signatures() const;
  std::vector<Interval> stack() const;

  friend bool operator==(const Tower&, const Tower&) = default;

 private:
  std::vector<SignedOrbital> elements_;
};

struct ChainCertificate {
  SignedOrbital first;
  SignedOrbital second;
  Interval overlap;
  std::size_t first_index = 0;   // position of first's signature in the input
  std::size_t second_index = 0;  // position of second's signature in the input
};

enum class Order { Less, Greater, Equal, Incomparable };
const char* to_string(Order o) noexcept;

std::vector<SignedOrbital> signed_orbitals(std::span<const PLMap> maps);

// Lexicographic order: orbital inclusion first, then the trivial order on
// signatures.
Order compare_signed(const SignedOrbital& p, const SignedOrbital& q);

std::vector<Interval> downset(const Interval& a, std::span<const Interval> pool);
std::vector<Interval> upset(const Interval& a, std::span<const Interval> pool);

// Every pair of members comparable under inclusion (equal counts as comparable).
bool is_stack(std::span<const Interval> pool);

// All maximal chains of the pool, ordered by bottom orbital, then size.
std::vector<Tower> maximal_towers(std::span<const SignedOrbital> pool);

bool is_fundamental(std::span<const SignedOrbital> pool);

Tower conjugate_tower(const Tower& t, const PLMap& c);

// compare_signed for every ordered pair, row-major.
std::vector<Order> comparison_matrix(std::span<const SignedOrbital> elements);

struct ProductCheck {
  PLMap ascending_product;   // a_1 a_2 ... a_n
  PLMap descending_product;  // a_n ... a_1
  bool verified = false;
};

// Throws Error(PreconditionViolated) if the orbitals are not strictly
// ascending or the signatures form a transition chain.
ProductCheck product_orbital_check(std::span<const SignedOrbital> chain);

// First crossing pair among the signed orbitals of `maps`, least by
// (overlap left end, overlap right end, first index, second index).
std::optional<ChainCertificate> detect_transition_chain(std::span<const PLMap> maps);

struct BallElement {
  Word word;
  PLMap element;
};

// Distinct elements of the word ball of the given radius, in order of first
// appearance (length, then letter order g1, g1^-1, g2, ...). Throws
// Error(ResourceLimit) once more than `cap` elements are found.
std::vector<BallElement> word_ball(const GenSet& g, std::size_t radius, std::size_t cap);

struct ChainSearch {
  std::optional<ChainCertificate> certificate;
  Word first_word;
  Word second_word;
  std::size_t radius = 0;  // level at which the certificate appeared, or the full radius
  std::size_t elements = 0;
};

inline constexpr std::size_t kDefaultElementCap = 200000;

// Enumerates the ball level by level and stops at the first level carrying a
// transition chain. An empty result only covers the searched ball.
ChainSearch search_transition_chain(const GenSet& g, std::size_t radius, std::size_t cap = kDefaultElementCap);

}  // namespace plo
