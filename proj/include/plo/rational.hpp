#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace plo {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator after every arithmetic operation.
using Rat = mpq_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);

// Accepts an optional sign followed by "p" or "p/q" in decimal. Throws
// Error(ParseError) on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

// num/den in lowest terms. The two-argument mpq_class constructor leaves the
// fraction unreduced, so use this instead.
Rat ratio(long num, long den);

Rat midpoint(const Rat& a, const Rat& b);

std::size_t hash_value(const Rat& value) noexcept;

inline void hash_combine(std::size_t& seed, std::size_t h) noexcept {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace plo
