// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "qahom/verify/suites.hpp"

using namespace qahom::verify;

int main(int argc, char** argv) {
  std::vector<int> ids;
  std::uint64_t seed = 1;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      ids.push_back(std::atoi(argv[++i]));
    } else if (a == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: qahom_acceptance [--criterion N]... [--seed S]\n";
      return 2;
    }
  }
  if (ids.empty())
    for (int id = 1; id <= suite_count; ++id) ids.push_back(id);

  int failed = 0;
  for (int id : ids) {
    if (id < 1 || id > suite_count) {
      std::cerr << "no criterion " << id << "\n";
      return 2;
    }
    const SuiteResult r = run_suite(id, seed, QAHOM_FIXTURES_DIR);
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    std::cout << "criterion " << id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.instances
              << " instances, " << secs << ")\n";
    for (const std::string& n : r.notes) std::cout << "    note: " << n << "\n";
    if (!r.passed) {
      std::cout << "    witness: " << r.witness << "\n";
      ++failed;
    }
  }
  std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
