#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace richwords::cli {

enum class ExitCode : int { ok = 0, failure = 1, usage = 2 };

enum class Format { csv, json, plain };

/// Settings shared by the subcommands.
struct RunConfig {
  int q = 2;
  int max_n = 10;
  bool reduced = false;
  unsigned workers = 1;
  std::uint64_t node_budget = 0;
  double time_budget_secs = 0;
  std::string format;  // empty: the subcommand's default
  std::string out_path;
  std::uint64_t seed = 42;
  bool permissive = false;
};

/// Runs `richlang` with `args` (program name excluded). Normal output goes to
/// `out` unless --out redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace richwords::cli
