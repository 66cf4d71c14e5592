// Acceptance suite: runs every criterion at its pinned tolerance and prints
// one pass/fail line each. Exit code is the number of failed criteria.

#include <cstdio>

#include "trinelab/verify.hpp"

int main() {
  const auto results = trinelab::run_acceptance_criteria({});
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s\n        %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("acceptance: %d/%d criteria passed\n", static_cast<int>(results.size()) - failed,
              static_cast<int>(results.size()));
  return failed;
}
