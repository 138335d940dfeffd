#include "richwords/rich.hpp"

#include <algorithm>

#include "json.hpp"
#include "richwords/eertree.hpp"
#include "richwords/errors.hpp"

namespace richwords {

bool is_rich(WordView w) { return is_rich(w, Alphabet::smallest_for(w)); }

bool is_rich(WordView w, const Alphabet& alphabet) {
  Eertree tree(alphabet);
  return std::all_of(w.begin(), w.end(), [&](Letter x) { return tree.append(x).created_new; });
}

std::size_t palindromic_factor_count(WordView w) {
  return Eertree::from_word(Alphabet::smallest_for(w), w).distinct_palindromes() + 1;
}

std::int64_t defect(WordView w) {
  return static_cast<std::int64_t>(w.size() + 1) -
         static_cast<std::int64_t>(palindromic_factor_count(w));
}

Word UpsFactorization::word() const {
  std::vector<Letter> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return Word(std::move(out));
}

UpsFactorization greedy_suffix_factorize(WordView w) {
  const auto alphabet = Alphabet::smallest_for(w);
  UpsFactorization out;
  std::size_t remaining = w.size();
  while (remaining > 0) {
    auto prefix = w.first(remaining);
    const std::size_t lps = Eertree::from_word(alphabet, prefix).longest_palindromic_suffix_length();
    out.parts.push_back(Word(prefix.last(lps)));
    remaining -= lps;
  }
  std::reverse(out.parts.begin(), out.parts.end());
  return out;
}

UpsFactorization ups_factorize(WordView w) {
  if (const auto d = defect(w); d != 0) throw NotRichError(d);
  return greedy_suffix_factorize(w);
}

std::size_t ups_part_count(WordView w) { return ups_factorize(w).p(); }

FactorizationRecord make_factorization_record(const Word& w, bool permissive) {
  const auto d = defect(w);
  if (d != 0 && !permissive) throw NotRichError(d);
  return FactorizationRecord{w, d == 0, d, greedy_suffix_factorize(w)};
}

std::string to_json(const FactorizationRecord& record) {
  nlohmann::ordered_json parts = nlohmann::ordered_json::array();
  for (const auto& part : record.factorization.parts) parts.push_back(part.to_string());
  nlohmann::ordered_json j;
  j["word"] = record.word.to_string();
  j["rich"] = record.rich;
  j["defect"] = record.defect;
  j["p"] = record.factorization.p();
  j["parts"] = std::move(parts);
  j["n"] = record.word.size();
  return j.dump();
}

}  // namespace richwords
