#pragma once

// The self-verification suite behind `verify all`: each check exercises one
// acceptance property end to end and reports pass/fail with a detail line.

#include <cstdint>
#include <string>
#include <vector>

namespace nullcone {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counts or the first mismatch; never timings
};

// Runs every check at the given size cap; deterministic for a fixed seed.
std::vector<CheckResult> run_all_checks(int max_size, std::uint64_t seed);

// Renders the fixed-order pass/fail table (one line per check plus a
// summary line); returns the number of failures.
int render_checks(const std::vector<CheckResult>& results, std::string& out);

}  // namespace nullcone
