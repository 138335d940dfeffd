#include "richwords/eertree.hpp"

#include <algorithm>

#include "richwords/errors.hpp"

namespace richwords {

Eertree::Eertree(const Alphabet& alphabet)
    : alphabet_(alphabet), dense_(alphabet.size() <= kDenseLimit) {
  clear();
}

Eertree Eertree::from_word(const Alphabet& alphabet, WordView w) {
  Eertree tree(alphabet);
  for (Letter x : w) tree.append(x);
  return tree;
}

void Eertree::clear() {
  nodes_.clear();
  dense_edges_.clear();
  sparse_edges_.clear();
  buffer_.clear();
  journal_.clear();
  push_node(-1, kImaginaryRoot);
  push_node(0, kImaginaryRoot);
  last_ = kEmptyRoot;
}

void Eertree::push_node(std::int32_t length, NodeId link) {
  nodes_.push_back(Node{length, link});
  if (dense_) {
    dense_edges_.resize(dense_edges_.size() + kDenseLimit, kNone);
  } else {
    sparse_edges_.emplace_back();
  }
}

Eertree::NodeId Eertree::transition(NodeId id, Letter x) const noexcept {
  auto slot = static_cast<std::size_t>(id);
  if (dense_) return dense_edges_[slot * kDenseLimit + x];
  for (const auto& [letter, child] : sparse_edges_[slot]) {
    if (letter == x) return child;
  }
  return kNone;
}

void Eertree::set_transition(NodeId id, Letter x, NodeId child) {
  auto slot = static_cast<std::size_t>(id);
  if (dense_) {
    dense_edges_[slot * kDenseLimit + x] = child;
  } else {
    sparse_edges_[slot].emplace_back(x, child);
  }
}

void Eertree::remove_transition(NodeId id, Letter x) {
  auto slot = static_cast<std::size_t>(id);
  if (dense_) {
    dense_edges_[slot * kDenseLimit + x] = kNone;
  } else {
    // The edge being undone is always the most recently added one.
    auto& edges = sparse_edges_[slot];
    edges.pop_back();
  }
}

// Walks suffix links from `from` until reaching a palindrome P such that the
// letter before the suffix P of buffer[0..i) equals x, i being the position of
// the letter just pushed. The imaginary root always qualifies.
Eertree::NodeId Eertree::find_extendable(NodeId from, Letter x) const noexcept {
  const auto i = static_cast<std::int64_t>(buffer_.size()) - 1;
  NodeId cur = from;
  while (true) {
    const std::int64_t before = i - 1 - nodes_[static_cast<std::size_t>(cur)].length;
    if (before >= 0 && buffer_[static_cast<std::size_t>(before)] == x) return cur;
    cur = nodes_[static_cast<std::size_t>(cur)].suffix_link;
  }
}

AppendOutcome Eertree::append(Letter x) {
  if (!alphabet_.contains(x)) {
    throw AlphabetError("letter index " + std::to_string(int{x}) +
                        " outside alphabet of size " + std::to_string(alphabet_.size()));
  }
  buffer_.push_back(x);
  const NodeId parent = find_extendable(last_, x);
  const NodeId existing = transition(parent, x);
  if (existing != kNone) {
    journal_.push_back({last_, kNone, x});
    last_ = existing;
    return {false, static_cast<std::size_t>(nodes_[static_cast<std::size_t>(existing)].length)};
  }

  const std::int32_t length = nodes_[static_cast<std::size_t>(parent)].length + 2;
  NodeId link = kEmptyRoot;
  if (length > 1) {
    link = transition(find_extendable(nodes_[static_cast<std::size_t>(parent)].suffix_link, x), x);
  }
  push_node(length, link);
  const auto id = static_cast<NodeId>(nodes_.size() - 1);
  set_transition(parent, x, id);
  journal_.push_back({last_, parent, x});
  last_ = id;
  return {true, static_cast<std::size_t>(length)};
}

void Eertree::undo() {
  if (journal_.empty()) throw UnderflowError("undo on an empty eertree journal");
  const JournalEntry entry = journal_.back();
  journal_.pop_back();
  if (entry.parent != kNone) {
    remove_transition(entry.parent, entry.letter);
    nodes_.pop_back();
    if (dense_) {
      dense_edges_.resize(dense_edges_.size() - kDenseLimit);
    } else {
      sparse_edges_.pop_back();
    }
  }
  last_ = entry.prior_last;
  buffer_.pop_back();
}

std::size_t Eertree::longest_palindromic_suffix_length() const {
  if (buffer_.empty()) throw EmptyWordError("longest palindromic suffix of the empty buffer");
  return static_cast<std::size_t>(nodes_[static_cast<std::size_t>(last_)].length);
}

}  // namespace richwords
