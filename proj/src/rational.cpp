#include "plo/rational.hpp"

#include <cctype>

#include "plo/error.hpp"

namespace plo {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::EndpointsNotFixed: return "EndpointsNotFixed";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NotAnOrbital: return "NotAnOrbital";
    case ErrorKind::NotInOrbital: return "NotInOrbital";
    case ErrorKind::NotSameOrbital: return "NotSameOrbital";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ContextOrbitalMismatch: return "ContextOrbitalMismatch";
    case ErrorKind::CannotFit: return "CannotFit";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError(1, 1, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError(1, 1, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat ratio(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidInterval, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat midpoint(const Rat& a, const Rat& b) {
  Rat m = (a + b) / 2;
  return m;
}

std::size_t hash_value(const Rat& value) noexcept {
  std::size_t seed = 0;
  // Low limbs are enough to spread values; equality is still decided exactly.
  hash_combine(seed, mpz_getlimbn(value.get_num_mpz_t(), 0));
  hash_combine(seed, static_cast<std::size_t>(mpz_sgn(value.get_num_mpz_t()) + 1));
  hash_combine(seed, mpz_getlimbn(value.get_den_mpz_t(), 0));
  return seed;
}

}  // namespace plo
