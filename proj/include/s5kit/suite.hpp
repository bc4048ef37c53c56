#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace s5kit {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;

  bool pass() const;
};

// The nine acceptance checks, one line written to `out` per criterion as it
// finishes. Verdicts and output are bit-identical for a fixed seed; no
// timing or other nondeterministic data is printed.
SuiteResult run_acceptance_suite(std::uint64_t seed, std::ostream& out);

}  // namespace s5kit
