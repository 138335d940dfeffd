#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "richwords/words.hpp"

namespace richwords {

/// Result of appending one letter to an Eertree.
struct AppendOutcome {
  /// True iff the longest palindromic suffix of the new buffer did not occur
  /// before, i.e. the number of distinct palindromic factors grew by one.
  bool created_new;
  /// Length of the longest palindromic suffix of the new buffer.
  std::size_t lps_length;
};

/// Palindromic tree over a growing word, with an undo journal.
///
/// Node 0 is the imaginary root of length -1 (linked to itself), node 1 the
/// empty palindrome (linked to node 0). Every other node is one distinct
/// non-empty palindromic factor of the buffer. Each append pushes exactly one
/// journal record, so `undo` restores the structure to the state before the
/// matching append, byte for byte.
///
/// Transitions live in a dense table for q <= 8 and in per-node association
/// lists above that.
///
/// Not thread-safe; give each worker its own instance.
class Eertree {
 public:
  using NodeId = std::int32_t;
  static constexpr NodeId kNone = -1;
  static constexpr NodeId kImaginaryRoot = 0;
  static constexpr NodeId kEmptyRoot = 1;
  static constexpr int kDenseLimit = 8;

  struct Node {
    std::int32_t length;
    NodeId suffix_link;
    friend bool operator==(const Node&, const Node&) = default;
  };

  explicit Eertree(const Alphabet& alphabet);

  /// Builds a tree by appending every letter of `w`.
  static Eertree from_word(const Alphabet& alphabet, WordView w);

  /// Throws AlphabetError if `x` is outside the alphabet.
  AppendOutcome append(Letter x);

  /// Reverts the most recent append. Throws UnderflowError if there is none.
  void undo();

  /// Number of distinct non-empty palindromic factors of the buffer.
  std::size_t distinct_palindromes() const noexcept { return nodes_.size() - 2; }

  /// Throws EmptyWordError on an empty buffer.
  std::size_t longest_palindromic_suffix_length() const;

  WordView buffer() const noexcept { return buffer_; }
  std::size_t size() const noexcept { return buffer_.size(); }
  bool empty() const noexcept { return buffer_.empty(); }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t journal_depth() const noexcept { return journal_.size(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
  NodeId last() const noexcept { return last_; }

  /// Child of `id` on letter `x` (the palindrome x P x), or kNone.
  NodeId transition(NodeId id, Letter x) const noexcept;

  void clear();

  friend bool operator==(const Eertree&, const Eertree&) = default;

 private:
  struct JournalEntry {
    NodeId prior_last;
    // Parent whose transition was added, or kNone if no node was created.
    NodeId parent;
    Letter letter;
    friend bool operator==(const JournalEntry&, const JournalEntry&) = default;
  };

  NodeId find_extendable(NodeId from, Letter x) const noexcept;
  void set_transition(NodeId id, Letter x, NodeId child);
  void remove_transition(NodeId id, Letter x);
  void push_node(std::int32_t length, NodeId link);

  Alphabet alphabet_;
  bool dense_;
  std::vector<Node> nodes_;
  std::vector<NodeId> dense_edges_;  // nodes_.size() * kDenseLimit entries
  std::vector<std::vector<std::pair<Letter, NodeId>>> sparse_edges_;
  std::vector<Letter> buffer_;
  std::vector<JournalEntry> journal_;
  NodeId last_ = kEmptyRoot;
};

}  // namespace richwords
