#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "richwords/errors.hpp"
#include "richwords/numeric.hpp"
#include "richwords/words.hpp"

namespace richwords {

/// R_0(q), ..., R_nmax(q): number of rich words of each length over q letters.
struct CountTable {
  int q = 2;
  std::vector<BigInt> counts;

  /// Largest length present, or -1 for an empty table.
  int n_max() const noexcept { return static_cast<int>(counts.size()) - 1; }
  bool covers(int n) const noexcept { return n >= 0 && n <= n_max(); }
  const BigInt& operator[](int n) const { return counts.at(static_cast<std::size_t>(n)); }

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

enum class CountMode {
  exact,
  /// Enumerates only canonical words (distinct letters first appear in
  /// increasing index order) and weights each by q (q-1) ... (q-k+1).
  symmetry_reduced,
};

/// Largest UPS part count seen at one length, with the lexicographically
/// smallest word attaining it.
struct LengthStats {
  std::size_t p_max = 0;
  Word witness;

  friend bool operator==(const LengthStats&, const LengthStats&) = default;
};

struct EnumerationStats {
  std::vector<LengthStats> per_length;  // index = word length
  /// Non-empty rich words reached by the search (canonical ones only in
  /// symmetry_reduced mode).
  std::uint64_t nodes_visited = 0;
  std::chrono::duration<double> wall_time{};
};

struct EnumerationOptions {
  CountMode mode = CountMode::exact;
  unsigned workers = 1;
  /// Zero means unlimited.
  std::uint64_t node_budget = 0;
  /// Zero means unlimited.
  std::chrono::duration<double> time_budget{0};
  /// Depth at which the search forest is split into independent subtrees.
  int split_depth = 8;
  /// Splitting stops early once the frontier reaches this many prefixes.
  std::size_t max_frontier = std::size_t{1} << 16;
};

struct EnumerationResult {
  CountTable table;
  EnumerationStats stats;
};

/// Raised when a node or time budget runs out. Carries the counts of every
/// length that was fully enumerated before the cut.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, CountTable partial)
      : Error(what), partial_(std::move(partial)) {}

  const CountTable& partial() const noexcept { return partial_; }
  int last_completed_length() const noexcept { return partial_.n_max(); }

 private:
  CountTable partial_;
};

/// Counts rich words of every length 0..n_max and records UPS statistics.
///
/// The search walks the tree of rich prefixes with a single eertree per
/// worker, pruning a branch the moment an append fails to create a node.
/// Totals are identical for every worker count and both modes.
EnumerationResult enumerate_counts(const Alphabet& alphabet, int n_max,
                                   const EnumerationOptions& options = {});

CountTable count_rich(const Alphabet& alphabet, int n_max, CountMode mode = CountMode::exact);
CountTable count_rich(const Alphabet& alphabet, int n_max, const EnumerationOptions& options);

using RichWordVisitor = std::function<void(WordView)>;

/// Calls `visitor` once per rich word of length n, in lexicographic order.
/// Single-threaded; honours the budgets in `options`. Returns the count.
std::uint64_t enumerate_rich(const Alphabet& alphabet, int n, const RichWordVisitor& visitor,
                             const EnumerationOptions& options = {});

struct MaxUpsParts {
  std::size_t p_max = 0;
  Word witness;
};

/// Maximum UPS part count over all rich words of length n >= 1.
MaxUpsParts max_ups_parts(const Alphabet& alphabet, int n, const EnumerationOptions& options = {});

}  // namespace richwords
