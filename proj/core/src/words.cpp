#include "richwords/words.hpp"

#include <algorithm>

#include "richwords/errors.hpp"

namespace richwords {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < kMinAlphabetSize || size > kMaxAlphabetSize) {
    throw AlphabetError("alphabet size must be in [2, 36], got " + std::to_string(size));
  }
}

Alphabet Alphabet::smallest_for(WordView w) {
  int top = 0;
  for (Letter x : w) top = std::max(top, int{x} + 1);
  return Alphabet(std::max(top, kMinAlphabetSize));
}

char Alphabet::render(Letter x) {
  if (x < 26) return static_cast<char>('a' + x);
  if (x < kMaxAlphabetSize) return static_cast<char>('0' + (x - 26));
  throw AlphabetError("letter index " + std::to_string(int{x}) + " has no rendering");
}

Letter Alphabet::parse_char(char c) {
  if (c >= 'a' && c <= 'z') return static_cast<Letter>(c - 'a');
  if (c >= '0' && c <= '9') return static_cast<Letter>(26 + (c - '0'));
  throw ParseError(std::string("invalid letter '") + c + "'");
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter x : letters_) {
    if (x >= kMaxAlphabetSize) {
      throw AlphabetError("letter index " + std::to_string(int{x}) + " exceeds 35");
    }
  }
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    Letter x = Alphabet::parse_char(c);
    if (!alphabet.contains(x)) {
      throw ParseError(std::string("letter '") + c + "' is outside the alphabet of size " +
                       std::to_string(alphabet.size()));
    }
    letters.push_back(x);
  }
  return Word(std::move(letters));
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  return Word(view().subspan(pos, len));
}

std::string Word::to_string() const { return render(letters_); }

std::string render(WordView w) {
  std::string out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(Alphabet::render(x));
  return out;
}

bool is_palindrome(WordView w) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}

Word reverse(WordView w) { return Word(std::vector<Letter>(w.rbegin(), w.rend())); }

std::set<Word> palindromic_factor_set_bruteforce(WordView w) {
  if (w.size() > kBruteForceMaxLength) {
    throw InputTooLargeError("brute-force oracle accepts at most 30 letters, got " +
                             std::to_string(w.size()));
  }
  std::set<Word> out;
  out.insert(Word{});
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      auto f = w.subspan(i, len);
      if (is_palindrome(f)) out.insert(Word(f));
    }
  }
  return out;
}

Word longest_palindromic_suffix_bruteforce(WordView w) {
  if (w.empty()) throw EmptyWordError("longest palindromic suffix of the empty word");
  for (std::size_t len = w.size(); len > 0; --len) {
    auto suffix = w.last(len);
    if (is_palindrome(suffix)) return Word(suffix);
  }
  return Word{};  // unreachable: a single letter is a palindrome
}

std::size_t count_occurrences(WordView haystack, WordView needle) {
  if (needle.size() > haystack.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + static_cast<std::ptrdiff_t>(i))) {
      ++count;
    }
  }
  return count;
}

BigInt count_palindromes_of_length(int i, int q) {
  if (i < 1) throw DomainError("palindrome length must be >= 1");
  static_cast<void>(Alphabet{q});
  return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>((i + 1) / 2));
}

}  // namespace richwords
