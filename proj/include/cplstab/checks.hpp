#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cplstab {

struct SuiteResult {
  std::string suite;
  long cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

// Names accepted by run_suite, in the order "all" executes them.
const std::vector<std::string>& suite_names();

// Runs one named verification suite. n_max < 0 selects the suite's default
// sweep bound; seed feeds the randomized straightening oracle so runs are
// reproducible. Unknown names throw std::invalid_argument.
SuiteResult run_suite(const std::string& name, int n_max = -1, std::uint64_t seed = 12345);

std::vector<SuiteResult> run_all_suites(int n_max = -1, std::uint64_t seed = 12345);

}  // namespace cplstab
