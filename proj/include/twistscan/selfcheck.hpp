// Named invariant suites for the verify command: each runs a desk-scale
// property battery and reports pass/fail with a short detail line.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace twistscan::selfcheck {

struct SuiteResult {
  std::string name;
  bool ok;
  std::string detail;
  double seconds;
};

struct Options {
  uint64_t seed = 42;
  bool inject_fault = false;  // deliberately corrupt one check (harness test)
};

std::vector<std::string> suite_names();
// Runs all suites (or the named subset) and returns per-suite results.
std::vector<SuiteResult> run_suites(const Options& opt,
                                    const std::vector<std::string>& only = {});

}  // namespace twistscan::selfcheck
