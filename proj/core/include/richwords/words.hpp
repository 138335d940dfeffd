#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "richwords/numeric.hpp"

namespace richwords {

using Letter = std::uint8_t;
using WordView = std::span<const Letter>;

inline constexpr int kMinAlphabetSize = 2;
inline constexpr int kMaxAlphabetSize = 36;

/// A finite alphabet {0, ..., q-1} with 2 <= q <= 36.
///
/// Letters render as `a`..`z` followed by `0`..`9`.
class Alphabet {
 public:
  explicit Alphabet(int size);

  int size() const noexcept { return size_; }
  bool contains(Letter x) const noexcept { return x < size_; }

  /// Smallest alphabet (at least binary) containing every letter of `w`.
  static Alphabet smallest_for(WordView w);

  static char render(Letter x);
  /// Letter index of a text character; throws ParseError for characters
  /// outside `a`-`z0`-`9`.
  static Letter parse_char(char c);

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
};

/// A finite word stored as letter indices.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  explicit Word(WordView letters) : Word(std::vector<Letter>(letters.begin(), letters.end())) {}

  /// Parses text over `alphabet`; rejects characters whose index is >= q.
  static Word parse(std::string_view text, const Alphabet& alphabet);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  WordView view() const noexcept { return letters_; }
  operator WordView() const noexcept { return letters_; }  // NOLINT(google-explicit-constructor)
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// The factor of length `len` starting at `pos`.
  Word factor(std::size_t pos, std::size_t len) const;

  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

std::string render(WordView w);

bool is_palindrome(WordView w);
Word reverse(WordView w);

/// Longest input accepted by the O(n^3) brute-force oracles.
inline constexpr std::size_t kBruteForceMaxLength = 30;

/// Every distinct palindromic factor of `w`, the empty word included.
///
/// Naive substring enumeration; kept independent of the eertree so it can
/// serve as ground truth. Throws InputTooLargeError above
/// kBruteForceMaxLength.
std::set<Word> palindromic_factor_set_bruteforce(WordView w);

/// Longest palindromic suffix by testing suffixes longest-first.
/// Throws EmptyWordError on the empty word.
Word longest_palindromic_suffix_bruteforce(WordView w);

/// Number of occurrences of `needle` as a factor of `haystack` (naive scan).
std::size_t count_occurrences(WordView haystack, WordView needle);

/// Number of palindromes of length i >= 1 over q letters: q^ceil(i/2).
BigInt count_palindromes_of_length(int i, int q);

}  // namespace richwords
