#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "richwords/errors.hpp"
#include "richwords/words.hpp"

using namespace richwords;

namespace {
Word w2(const char* text) { return Word::parse(text, Alphabet{2}); }
}  // namespace

TEST_CASE("alphabet bounds and rendering") {
  CHECK_THROWS_AS(Alphabet{1}, AlphabetError);
  CHECK_THROWS_AS(Alphabet{37}, AlphabetError);
  CHECK(Alphabet{36}.size() == 36);
  CHECK(Alphabet::render(0) == 'a');
  CHECK(Alphabet::render(25) == 'z');
  CHECK(Alphabet::render(26) == '0');
  CHECK(Alphabet::parse_char('9') == 35);
  CHECK_THROWS_AS(Alphabet::parse_char('A'), ParseError);
  CHECK(Alphabet::smallest_for(Word::parse("abd", Alphabet{4})).size() == 4);
  CHECK(Alphabet::smallest_for(Word{}).size() == 2);
}

TEST_CASE("parse rejects letters outside the alphabet") {
  CHECK_THROWS_AS(Word::parse("abc", Alphabet{2}), ParseError);
  CHECK_THROWS_AS(Word::parse("a-b", Alphabet{2}), ParseError);
  CHECK(Word::parse("", Alphabet{2}).empty());
  CHECK(w2("abba").to_string() == "abba");
}

TEST_CASE("palindromic factors of small words") {
  const auto pals = palindromic_factor_set_bruteforce(w2("abaab"));
  std::set<std::string> text;
  for (const auto& p : pals) text.insert(p.to_string());
  CHECK(text == std::set<std::string>{"", "a", "b", "aa", "aba", "baab"});

  const auto abc = palindromic_factor_set_bruteforce(Word::parse("abcabc", Alphabet{3}));
  CHECK(abc.size() == 4);
  CHECK(palindromic_factor_set_bruteforce(Word{}).size() == 1);

  CHECK_THROWS_AS(palindromic_factor_set_bruteforce(Word(std::vector<Letter>(31, 0))),
                  InputTooLargeError);
}

TEST_CASE("longest palindromic suffix") {
  CHECK(longest_palindromic_suffix_bruteforce(w2("abaab")).to_string() == "baab");
  CHECK(longest_palindromic_suffix_bruteforce(w2("ab")).to_string() == "b");
  CHECK_THROWS_AS(longest_palindromic_suffix_bruteforce(Word{}), EmptyWordError);
}

TEST_CASE("reversal, factors and occurrences") {
  CHECK(reverse(w2("aab")).to_string() == "baa");
  CHECK(is_palindrome(Word{}));
  CHECK(is_palindrome(w2("abba")));
  CHECK_FALSE(is_palindrome(w2("ab")));
  CHECK(w2("abaab").factor(1, 3).to_string() == "baa");
  CHECK(count_occurrences(w2("aaaa"), w2("aa")) == 3);
  CHECK(count_occurrences(w2("ab"), w2("abb")) == 0);
}

TEST_CASE("palindromes of a given length") {
  CHECK(count_palindromes_of_length(4, 3) == 9);
  for (int q : {2, 3}) {
    for (int i = 1; i <= 8; ++i) {
      std::uint64_t count = 0;
      oracle::for_each_word(q, i, [&](const oracle::Letters& w) { count += oracle::palindrome(w, 0, w.size()) ? 1 : 0; });
      CHECK(count_palindromes_of_length(i, q) == count);
    }
  }
}

TEST_CASE("at most |w|+1 palindromic factors, exhaustive binary") {
  for (int n = 0; n <= 14; ++n) {
    oracle::for_each_word(2, n, [&](const oracle::Letters& w) {
      const auto count = palindromic_factor_set_bruteforce(Word(w)).size();
      REQUIRE(count <= w.size() + 1);
      REQUIRE(count == oracle::palindrome_count(w));
    });
  }
}

TEST_CASE("at most |w|+1 palindromic factors, sampled") {
  std::mt19937_64 rng(7);
  for (int q : {3, 4}) {
    for (int n = 1; n <= 20; ++n) {
      for (int k = 0; k < 50; ++k) {
        const Word w(oracle::random_word(rng, q, n));
        REQUIRE(palindromic_factor_set_bruteforce(w).size() <= w.size() + 1);
      }
    }
  }
}

TEST_CASE("reversal preserves the palindromic factor set") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Word w(oracle::random_word(rng, 3, 12));
    std::set<Word> reversed;
    for (const auto& p : palindromic_factor_set_bruteforce(w)) reversed.insert(p);
    CHECK(palindromic_factor_set_bruteforce(reverse(w)) == reversed);
  }
}
