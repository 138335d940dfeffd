#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace richwords::cli {

struct CheckResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::uint64_t marginal = 0;
  std::vector<std::string> counterexamples;  // first few only
  std::vector<std::string> notes;

  void fail(std::string what);
  bool passed() const noexcept { return failures == 0; }
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

struct VerifyConfig {
  int q = 2;
  int max_n = 12;
  std::uint64_t seed = 42;
  unsigned workers = 1;
};

SuiteResult run_oracle_suite(const VerifyConfig& config);
SuiteResult run_lemmas_suite(const VerifyConfig& config);
SuiteResult run_appendix_suite(const VerifyConfig& config);

/// "oracle", "lemmas", "appendix" or "all".
std::vector<SuiteResult> run_suites(const std::string& which, const VerifyConfig& config);

}  // namespace richwords::cli
