#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plo/io.hpp"

namespace plo {

struct CheckResult {
  std::string suite;
  std::string check;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // re-checkable description of the first failing case
  bool passed() const noexcept { return failures == 0; }
};

struct Report {
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::vector<std::string> suites;
  std::vector<CheckResult> checks;
  std::vector<std::optional<double>> suite_seconds;  // filled only when timings are requested

  bool passed() const noexcept;
  Json to_json() const;
  std::string to_text() const;
};

const std::vector<std::string>& known_suites();

// Runs the named property suites with generators seeded from `seed`; `size`
// is the number of random instances per suite. Throws Error(UnknownSuite).
// Without timings the report is a pure function of the arguments.
Report run_verify(const std::vector<std::string>& suites, std::uint64_t seed, std::size_t size, bool timings = false);

}  // namespace plo
