#pragma once

// Invariant suites shared by the acceptance runner and the CLI selftest.

#include <cstdint>
#include <string>
#include <vector>

namespace kleinbu {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  /// Minimal reproducer lines, capped.
  std::vector<std::string> failures;
  /// Informational lines (counts, volumes).
  std::vector<std::string> notes;
  double seconds = 0.0;
};

/// Names accepted by run_suite, in acceptance order.
std::vector<std::string> const& suite_names();

/// Throws PreconditionError for an unknown name. Deterministic given seed.
SuiteResult run_suite(std::string const& name, std::uint64_t seed = 20240601);

}  // namespace kleinbu
