#include "richwords/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "richwords/eertree.hpp"

namespace richwords {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kFlushInterval = 4096;

// Shared stop condition. Workers flush their node counts in batches.
class Budget {
 public:
  explicit Budget(const EnumerationOptions& options)
      : node_limit_(options.node_budget),
        timed_(options.time_budget.count() > 0),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(options.time_budget)) {}

  // Returns false once the search must stop.
  bool charge(std::uint64_t nodes) {
    if (stopped_.load(std::memory_order_relaxed)) return false;
    const auto total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if ((node_limit_ != 0 && total > node_limit_) || (timed_ && Clock::now() > deadline_)) {
      stopped_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool stopped() const noexcept { return stopped_.load(std::memory_order_relaxed); }
  void stop() noexcept { stopped_.store(true, std::memory_order_relaxed); }

 private:
  std::uint64_t node_limit_;
  bool timed_;
  Clock::time_point deadline_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> stopped_{false};
};

// Per-worker tallies: canonical counts bucketed by (length, letters used).
struct Accumulator {
  Accumulator(int q, int n_max)
      : width(static_cast<std::size_t>(q) + 1),
        by_length(static_cast<std::size_t>(n_max + 1) * width, 0),
        stats(static_cast<std::size_t>(n_max + 1)) {}

  void record(int length, int bucket, std::size_t p, WordView word) {
    ++by_length[static_cast<std::size_t>(length) * width + static_cast<std::size_t>(bucket)];
    ++nodes;
    // Each worker sees words of one length in increasing lexicographic order,
    // so the first word to reach a new maximum is the smallest one.
    auto& s = stats[static_cast<std::size_t>(length)];
    if (p > s.p_max) {
      s.p_max = p;
      s.witness = Word(word);
    }
  }

  void merge(const Accumulator& other) {
    for (std::size_t i = 0; i < by_length.size(); ++i) by_length[i] += other.by_length[i];
    for (std::size_t n = 0; n < stats.size(); ++n) {
      const auto& theirs = other.stats[n];
      auto& ours = stats[n];
      if (theirs.p_max > ours.p_max ||
          (theirs.p_max == ours.p_max && theirs.p_max > 0 && theirs.witness < ours.witness)) {
        ours = theirs;
      }
    }
    nodes += other.nodes;
  }

  std::size_t width;
  std::vector<std::uint64_t> by_length;
  std::vector<LengthStats> stats;  // p_max == 0 marks "nothing seen" for n >= 1
  std::uint64_t nodes = 0;
};

// Depth-first walker over rich words using append/undo on one eertree.
// Tracks the UPS part count of every prefix on the current path:
// p(w) = 1 + p(w without its longest palindromic suffix).
class Walker {
 public:
  Walker(const Alphabet& alphabet, bool reduced, int n_max)
      : tree_(alphabet),
        q_(alphabet.size()),
        reduced_(reduced),
        parts_(static_cast<std::size_t>(n_max) + 1, 0),
        letters_used_(static_cast<std::size_t>(n_max) + 1, 0) {}

  void reset_to(WordView prefix) {
    tree_.clear();
    for (Letter x : prefix) step(x);
  }

  int depth() const noexcept { return static_cast<int>(tree_.size()); }
  WordView buffer() const noexcept { return tree_.buffer(); }

  int letter_bound() const noexcept {
    return reduced_ ? std::min(letters_used_[tree_.size()] + 1, q_) : q_;
  }

  // Appends x; on success updates path data and returns true. On failure the
  // append is already undone.
  bool step(Letter x) {
    const auto from = tree_.size();
    const auto outcome = tree_.append(x);
    if (!outcome.created_new) {
      tree_.undo();
      return false;
    }
    const auto d = from + 1;
    parts_[d] = 1 + parts_[d - outcome.lps_length];
    letters_used_[d] = std::max(letters_used_[from], int{x} + 1);
    return true;
  }

  void back() { tree_.undo(); }

  std::size_t parts() const noexcept { return parts_[tree_.size()]; }
  int bucket() const noexcept { return reduced_ ? letters_used_[tree_.size()] : 0; }

  // Visits every rich extension of the current buffer up to length n_max.
  // `visit` returns false to abort; descend then returns false.
  template <class Visit>
  bool descend(int n_max, Visit& visit) {
    if (depth() >= n_max) return true;
    const int bound = letter_bound();
    for (int x = 0; x < bound; ++x) {
      if (!step(static_cast<Letter>(x))) continue;
      const bool ok = visit(*this) && descend(n_max, visit);
      back();
      if (!ok) return false;
    }
    return true;
  }

 private:
  Eertree tree_;
  int q_;
  bool reduced_;
  std::vector<std::size_t> parts_;
  std::vector<int> letters_used_;
};

CountTable finish_table(const Alphabet& alphabet, const Accumulator& acc, int through, bool reduced) {
  CountTable table{alphabet.size(), {}};
  std::vector<BigInt> weights;
  for (int k = 0; k <= alphabet.size(); ++k) {
    weights.push_back(reduced ? falling_factorial(alphabet.size(), k) : BigInt(1));
  }
  for (int n = 0; n <= through; ++n) {
    BigInt total = 0;
    for (std::size_t k = 0; k < acc.width; ++k) {
      const auto c = acc.by_length[static_cast<std::size_t>(n) * acc.width + k];
      if (c != 0) total += weights[k] * c;
    }
    table.counts.push_back(std::move(total));
  }
  return table;
}

[[noreturn]] void throw_budget(const Alphabet& alphabet, const Accumulator& acc, int completed,
                               bool reduced) {
  throw BudgetExceeded("enumeration budget exhausted; lengths 0.." + std::to_string(completed) +
                           " are complete",
                       finish_table(alphabet, acc, completed, reduced));
}

}  // namespace

EnumerationResult enumerate_counts(const Alphabet& alphabet, int n_max,
                                   const EnumerationOptions& options) {
  if (n_max < 0) throw DomainError("maximum length must be non-negative");
  const auto started = Clock::now();
  const bool reduced = options.mode == CountMode::symmetry_reduced;
  Budget budget(options);

  Accumulator total(alphabet.size(), n_max);
  total.by_length[0] = 1;  // the empty word, no letters used
  total.stats[0] = LengthStats{0, Word{}};

  // Breadth-first over short prefixes: each level completes one length.
  std::vector<Word> frontier{Word{}};
  int completed = 0;
  Walker walker(alphabet, reduced, n_max);
  std::uint64_t pending = 0;
  while (completed < n_max && completed < options.split_depth &&
         frontier.size() < options.max_frontier) {
    std::vector<Word> next;
    for (const auto& prefix : frontier) {
      walker.reset_to(prefix);
      const int bound = walker.letter_bound();
      for (int x = 0; x < bound; ++x) {
        if (!walker.step(static_cast<Letter>(x))) continue;
        total.record(walker.depth(), walker.bucket(), walker.parts(), walker.buffer());
        next.emplace_back(walker.buffer());
        walker.back();
        if (++pending == kFlushInterval) {
          if (!budget.charge(pending)) throw_budget(alphabet, total, completed, reduced);
          pending = 0;
        }
      }
    }
    frontier = std::move(next);
    ++completed;
  }
  if (!budget.charge(pending)) throw_budget(alphabet, total, completed, reduced);

  // Depth-first below the frontier, one private walker per worker.
  if (completed < n_max) {
    const auto workers = static_cast<unsigned>(
        std::clamp<std::size_t>(options.workers, 1, frontier.size()));
    std::vector<Accumulator> partials(workers, Accumulator(alphabet.size(), n_max));
    std::atomic<std::size_t> next_prefix{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run = [&](Accumulator& acc) {
      try {
        Walker local(alphabet, reduced, n_max);
        std::uint64_t unflushed = 0;
        auto visit = [&](const Walker& w) {
          acc.record(w.depth(), w.bucket(), w.parts(), w.buffer());
          if (++unflushed == kFlushInterval) {
            unflushed = 0;
            return budget.charge(kFlushInterval);
          }
          return true;
        };
        // Prefixes are claimed in increasing order, keeping each worker's
        // visit order lexicographic.
        for (auto i = next_prefix.fetch_add(1); i < frontier.size() && !budget.stopped();
             i = next_prefix.fetch_add(1)) {
          local.reset_to(frontier[i]);
          if (!local.descend(n_max, visit)) return;
        }
        budget.charge(unflushed);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        budget.stop();
      }
    };

    if (workers == 1) {
      run(partials[0]);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, std::ref(partials[w]));
    }
    if (failure) std::rethrow_exception(failure);
    if (budget.stopped()) throw_budget(alphabet, total, completed, reduced);
    for (const auto& acc : partials) total.merge(acc);
  }

  EnumerationResult result;
  result.table = finish_table(alphabet, total, n_max, reduced);
  result.stats.per_length = std::move(total.stats);
  result.stats.nodes_visited = total.nodes;
  result.stats.wall_time = Clock::now() - started;
  return result;
}

CountTable count_rich(const Alphabet& alphabet, int n_max, CountMode mode) {
  EnumerationOptions options;
  options.mode = mode;
  return count_rich(alphabet, n_max, options);
}

CountTable count_rich(const Alphabet& alphabet, int n_max, const EnumerationOptions& options) {
  return enumerate_counts(alphabet, n_max, options).table;
}

std::uint64_t enumerate_rich(const Alphabet& alphabet, int n, const RichWordVisitor& visitor,
                             const EnumerationOptions& options) {
  if (n < 0) throw DomainError("word length must be non-negative");
  if (n == 0) {
    visitor(WordView{});
    return 1;
  }
  Budget budget(options);
  Walker walker(alphabet, false, n);
  std::uint64_t count = 0;
  std::uint64_t unflushed = 0;
  auto visit = [&](const Walker& w) {
    if (w.depth() == n) {
      visitor(w.buffer());
      ++count;
    }
    if (++unflushed == kFlushInterval) {
      unflushed = 0;
      return budget.charge(kFlushInterval);
    }
    return true;
  };
  if (!walker.descend(n, visit)) {
    throw BudgetExceeded("enumeration budget exhausted", CountTable{alphabet.size(), {BigInt(1)}});
  }
  return count;
}

MaxUpsParts max_ups_parts(const Alphabet& alphabet, int n, const EnumerationOptions& options) {
  if (n < 1) throw DomainError("max_ups_parts needs n >= 1");
  auto result = enumerate_counts(alphabet, n, options);
  auto& s = result.stats.per_length[static_cast<std::size_t>(n)];
  return MaxUpsParts{s.p_max, std::move(s.witness)};
}

}  // namespace richwords
