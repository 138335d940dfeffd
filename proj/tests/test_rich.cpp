#include <doctest.h>

#include <json.hpp>
#include <random>

#include "oracles.hpp"
#include "richwords/errors.hpp"
#include "richwords/rich.hpp"

using namespace richwords;

namespace {
Word w(const char* text, int q = 2) { return Word::parse(text, Alphabet{q}); }

std::vector<std::string> part_text(const UpsFactorization& f) {
  std::vector<std::string> out;
  for (const auto& p : f.parts) out.push_back(p.to_string());
  return out;
}
}  // namespace

TEST_CASE("richness and defect") {
  CHECK(is_rich(w("abaab")));
  CHECK(defect(w("abaab")) == 0);
  CHECK(palindromic_factor_count(w("abaab")) == 6);
  CHECK_FALSE(is_rich(w("abcabc", 3)));
  CHECK(defect(w("abcabc", 3)) == 3);
  CHECK(is_rich(Word{}));
  CHECK(defect(Word{}) == 0);
}

TEST_CASE("factorization examples") {
  CHECK(part_text(ups_factorize(w("abaab"))) == std::vector<std::string>{"a", "baab"});
  CHECK(part_text(ups_factorize(w("aaaa"))) == std::vector<std::string>{"aaaa"});
  CHECK(part_text(ups_factorize(w("abc", 3))) == std::vector<std::string>{"a", "b", "c"});
  CHECK(ups_factorize(Word{}).p() == 0);
  CHECK(ups_part_count(w("abaab")) == 2);
}

TEST_CASE("non-rich input") {
  try {
    ups_factorize(w("abcabc", 3));
    FAIL("expected NotRichError");
  } catch (const NotRichError& e) {
    CHECK(e.defect() == 3);
  }
  const auto greedy = greedy_suffix_factorize(w("abcabc", 3));
  CHECK(greedy.word() == w("abcabc", 3));
  CHECK(greedy.p() == 6);
}

TEST_CASE("factorization invariants for every rich binary word up to 14") {
  std::size_t rich_words = 0;
  for (int n = 0; n <= 14; ++n) {
    oracle::for_each_word(2, n, [&](const oracle::Letters& letters) {
      const Word word(letters);
      if (!is_rich(word)) return;
      ++rich_words;
      std::vector<oracle::Letters> parts;
      for (const auto& p : ups_factorize(word).parts) parts.push_back(p.letters());
      const auto broken = oracle::ups_violation(letters, parts);
      INFO(word.to_string(), " ", broken);
      REQUIRE(broken.empty());
    });
  }
  CHECK(rich_words == 1 + 2 + 4 + 8 + 16 + 32 + 64 + 128 + 252 + 488 + 932 + 1756 + 3246 + 5916 + 10618);
}

TEST_CASE("richness agrees with the oracle and is closed under reversal, factors and prefixes") {
  std::mt19937_64 rng(13);
  for (int q : {2, 3}) {
    for (int trial = 0; trial < 400; ++trial) {
      const auto letters = oracle::random_word(rng, q, 14);
      const Word word(letters);
      const bool rich = is_rich(word);
      REQUIRE(rich == oracle::rich(letters));
      REQUIRE(is_rich(reverse(word)) == rich);
      if (!rich) continue;
      for (std::size_t pos = 0; pos < word.size(); ++pos) {
        for (std::size_t len = 0; pos + len <= word.size(); ++len) REQUIRE(is_rich(word.factor(pos, len)));
      }
    }
  }
}

TEST_CASE("record serialization") {
  const auto record = make_factorization_record(w("abaab"), false);
  const auto json = nlohmann::json::parse(to_json(record));
  CHECK(json["word"] == "abaab");
  CHECK(json["rich"] == true);
  CHECK(json["defect"] == 0);
  CHECK(json["p"] == 2);
  CHECK(json["parts"] == nlohmann::json::array({"a", "baab"}));
  CHECK(json["n"] == 5);
  CHECK(to_json(record).find('\n') == std::string::npos);

  CHECK_THROWS_AS(make_factorization_record(w("abcabc", 3), false), NotRichError);
  const auto loose = make_factorization_record(w("abcabc", 3), true);
  CHECK_FALSE(loose.rich);
  CHECK(loose.defect == 3);
}
