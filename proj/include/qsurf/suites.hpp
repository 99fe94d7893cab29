#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qsurf {

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Random cases per suite (per fixture where a suite sweeps fixtures).
  int cases = 100;
  /// Longest random word.
  int max_word = 8;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  /// The first few counterexamples, one line each.
  std::vector<std::string> failures;
  /// Measurements worth reporting that are not pass/fail checks.
  std::vector<std::string> notes;
};

using Suite = std::function<SuiteResult(const SuiteOptions&)>;

struct NamedSuite {
  std::string name;
  std::string description;
  Suite run;
};

/// Every built-in suite in a fixed order.
const std::vector<NamedSuite>& all_suites();
/// Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace qsurf
