// verify.hpp — the end-to-end verification battery: every headline number
// and identity of the artifact, each with its pinned tolerance. Shared by
// the acceptance test binary and the `verify-all` CLI subcommand.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trinelab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  bool corrupt_pgm = false;  // negative control: perturbs one PGM element by 1e-3
};

/// Runs the ten criteria in order; never throws (failures are reported).
std::vector<CriterionResult> run_acceptance_criteria(const VerifyOptions& opt = {});

/// The four headline error probabilities, for the summary table.
struct HeadlineNumbers {
  double global_error = 0.0;    // 1/2 - sqrt(2)/3
  double sep_error = 0.0;       // equal to global
  double two_way_error = 0.0;   // ~6.47e-2
  double one_way_error = 0.0;   // 1/2 - sqrt(3)/4
};

HeadlineNumbers headline_numbers();

}  // namespace trinelab
