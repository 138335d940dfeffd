#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "richwords/words.hpp"

namespace richwords {

/// True iff `w` has |w|+1 distinct palindromic factors (the empty word
/// included). Computed incrementally: every append must create a node.
bool is_rich(WordView w);
bool is_rich(WordView w, const Alphabet& alphabet);

/// |w| + 1 minus the number of distinct palindromic factors; zero iff rich.
std::int64_t defect(WordView w);

/// Distinct palindromic factors of `w`, the empty word included.
std::size_t palindromic_factor_count(WordView w);

/// w = w_p ... w_2 w_1 where each w_i is the longest palindromic suffix of
/// w_p ... w_i. `parts` is stored left to right (w_p first).
///
/// For a rich word the parts are pairwise distinct palindromes and each is
/// unioccurrent in the prefix it ends. The empty word factorizes into zero
/// parts.
struct UpsFactorization {
  std::vector<Word> parts;

  std::size_t p() const noexcept { return parts.size(); }
  /// Concatenation of the parts.
  Word word() const;
};

/// UPS-factorization of a rich word. Throws NotRichError (carrying the
/// defect) if `w` is not rich.
UpsFactorization ups_factorize(WordView w);

/// Same greedy stripping of longest palindromic suffixes, applied to any
/// word. Parts need not be distinct when `w` is not rich.
UpsFactorization greedy_suffix_factorize(WordView w);

/// Number of parts of the UPS-factorization. Throws NotRichError.
std::size_t ups_part_count(WordView w);

/// Analysis record serialized by the CLI and the JSON interface.
struct FactorizationRecord {
  Word word;
  bool rich;
  std::int64_t defect;
  UpsFactorization factorization;
};

FactorizationRecord make_factorization_record(const Word& w, bool permissive);

/// {"word", "rich", "defect", "p", "parts", "n"} as a single-line JSON object.
std::string to_json(const FactorizationRecord& record);

}  // namespace richwords
