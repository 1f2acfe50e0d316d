#pragma once

// The property suites behind `selftest` and the acceptance binary. Each
// suite is deterministic in its seed.

#include <cstdint>
#include <string>
#include <vector>

namespace qahom::verify {

struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::string witness;              // smallest failing instance
  std::vector<std::string> notes;   // deterministic diagnostics
  double seconds = 0;
};

constexpr int suite_count = 12;

SuiteResult run_suite(int id, std::uint64_t seed, const std::string& fixtures_dir);
std::vector<SuiteResult> run_all(std::uint64_t seed, const std::string& fixtures_dir);

}  // namespace qahom::verify
