#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "richwords/bounds.hpp"
#include "richwords/eertree.hpp"
#include "richwords/enumerate.hpp"
#include "richwords/report.hpp"
#include "richwords/rich.hpp"

namespace richwords::cli {
namespace {

constexpr std::size_t kMaxCounterexamples = 10;

// Calls fn on every word of length n over q letters, lexicographically.
void for_each_word(int q, int n, const std::function<void(const Word&)>& fn) {
  std::vector<Letter> letters(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(Word(letters));
    int i = n - 1;
    while (i >= 0 && letters[static_cast<std::size_t>(i)] == q - 1) letters[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
    ++letters[static_cast<std::size_t>(i)];
  }
}

Word random_word(std::mt19937_64& rng, int q, int n) {
  std::uniform_int_distribution<int> pick(0, q - 1);
  std::vector<Letter> letters(static_cast<std::size_t>(n));
  for (auto& x : letters) x = static_cast<Letter>(pick(rng));
  return Word(std::move(letters));
}

bool bruteforce_rich(WordView w) { return palindromic_factor_set_bruteforce(w).size() == w.size() + 1; }

// Compares eertree answers with the brute-force oracles for one word.
void compare_with_oracle(CheckResult& check, const Word& w, int q) {
  ++check.checks;
  const auto tree = Eertree::from_word(Alphabet(q), w);
  const auto expected = palindromic_factor_set_bruteforce(w).size() - 1;
  if (tree.distinct_palindromes() != expected) {
    check.fail(w.to_string() + ": eertree counts " + std::to_string(tree.distinct_palindromes()) +
               ", oracle " + std::to_string(expected));
    return;
  }
  if (!w.empty() &&
      tree.longest_palindromic_suffix_length() != longest_palindromic_suffix_bruteforce(w).size()) {
    check.fail(w.to_string() + ": longest palindromic suffix length differs from oracle");
  }
}

std::optional<std::string> ups_violation(const Word& w) {
  const auto f = ups_factorize(w);
  if (f.word() != w) return "parts do not concatenate to the word";
  std::set<Word> seen;
  std::size_t end = 0;
  for (const auto& part : f.parts) {
    end += part.size();
    const auto prefix = w.view().first(end);
    if (part.empty() || !is_palindrome(part)) return "part " + part.to_string() + " is not a palindrome";
    if (!seen.insert(part).second) return "part " + part.to_string() + " repeats";
    if (longest_palindromic_suffix_bruteforce(prefix) != part) {
      return "part " + part.to_string() + " is not the longest palindromic suffix of its prefix";
    }
    if (count_occurrences(prefix, part) != 1) return "part " + part.to_string() + " is not unioccurrent";
  }
  return std::nullopt;
}

// Sum over compositions of n, grouped by number of parts, by explicit
// enumeration of every composition.
std::vector<BigInt> compositions_bruteforce(int n, const CountTable& table) {
  std::vector<BigInt> by_parts(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, int, const BigInt&)> rec = [&](int left, int parts, const BigInt& product) {
    if (left == 0) {
      by_parts[static_cast<std::size_t>(parts)] += product;
      return;
    }
    for (int first = 1; first <= left; ++first) rec(left - first, parts + 1, product * table[(first + 1) / 2]);
  };
  rec(n, 0, BigInt(1));
  return by_parts;
}

CheckResult eertree_exhaustive(const VerifyConfig& config) {
  CheckResult check{"eertree-exhaustive"};
  for (int n = 0; n <= config.max_n; ++n) {
    for_each_word(config.q, n, [&](const Word& w) { compare_with_oracle(check, w, config.q); });
  }
  return check;
}

CheckResult eertree_sampled(const VerifyConfig& config) {
  CheckResult check{"eertree-sampled"};
  std::mt19937_64 rng(config.seed);
  for (int q : {3, 4}) {
    for (int n = 1; n <= 18; ++n) {
      for (int i = 0; i < 1000; ++i) compare_with_oracle(check, random_word(rng, q, n), q);
    }
  }
  return check;
}

CheckResult undo_fuzz(const VerifyConfig& config) {
  CheckResult check{"undo-fuzz"};
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::bernoulli_distribution push(0.6);
  std::uniform_int_distribution<int> letter(0, 1);
  const Alphabet binary(2);
  Eertree tree(binary);
  for (int step = 0; step < 5000; ++step) {
    if (tree.empty() || (tree.size() < 15 && push(rng))) {
      tree.append(static_cast<Letter>(letter(rng)));
    } else {
      tree.undo();
    }
    ++check.checks;
    const auto replay = Eertree::from_word(binary, tree.buffer());
    if (!(replay == tree) ||
        tree.distinct_palindromes() != palindromic_factor_set_bruteforce(tree.buffer()).size() - 1) {
      check.fail(render(tree.buffer()) + ": state after step " + std::to_string(step) +
                 " differs from a replayed tree");
    }
  }
  return check;
}

CheckResult enumeration_census(const VerifyConfig& config) {
  CheckResult check{"enumeration-census"};
  const Alphabet alphabet(config.q);
  EnumerationOptions exact;
  exact.workers = config.workers;
  EnumerationOptions reduced = exact;
  reduced.mode = CountMode::symmetry_reduced;
  const auto table = count_rich(alphabet, config.max_n, exact);
  const auto reduced_table = count_rich(alphabet, config.max_n, reduced);
  for (int n = 0; n <= config.max_n; ++n) {
    std::uint64_t census = 0;
    for_each_word(config.q, n, [&](const Word& w) { census += bruteforce_rich(w) ? 1 : 0; });
    ++check.checks;
    if (table[n] != census) {
      check.fail("R_" + std::to_string(n) + ": enumeration " + to_string(table[n]) + ", census " +
                 std::to_string(census));
    }
    ++check.checks;
    if (reduced_table[n] != table[n]) check.fail("R_" + std::to_string(n) + ": reduced mode disagrees");
  }
  return check;
}

CheckResult ups_invariants(const VerifyConfig& config) {
  CheckResult check{"ups-invariants"};
  const Alphabet alphabet(config.q);
  for (int n = 1; n <= config.max_n; ++n) {
    enumerate_rich(alphabet, n, [&](WordView view) {
      ++check.checks;
      const Word w(view);
      if (auto why = ups_violation(w)) check.fail(w.to_string() + ": " + *why);
    });
  }
  return check;
}

CheckResult theorem_a(const VerifyConfig& config) {
  CheckResult check{"lemma-b-theorem-a"};
  EnumerationOptions options;
  options.workers = config.workers;
  const auto result = enumerate_counts(Alphabet(config.q), config.max_n, options);
  const auto verdict = verify_theorem_a(result.stats, config.q);
  check.checks = static_cast<std::uint64_t>(std::max(config.max_n, 0));
  for (int n : verdict.violations) {
    check.fail("n=" + std::to_string(n) + ": p_max=" +
               std::to_string(result.stats.per_length[static_cast<std::size_t>(n)].p_max) +
               " exceeds a part-count bound");
  }
  check.notes.push_back("max p_max(n) ln n / n = " + format_fixed6(verdict.max_ratio) + " at n=" +
                        std::to_string(verdict.argmax_n) + " (c = " +
                        format_fixed6(constant_c(config.q)) + ")");
  return check;
}

CheckResult lemma_c_grid() {
  CheckResult check{"lemma-c-grid"};
  for (int N = 1; N <= 50; ++N) {
    for (int k = 1; k <= 40; ++k) {  // x = 1 + k/20
      if (N * k < 40) continue;
      ++check.checks;
      const Real x = 1 + Real(k) / 20;
      const auto r = check_lemma_c(N, x);
      if (r.verdict == Verdict::marginal) ++check.marginal;
      if (r.verdict != Verdict::holds) {
        check.fail("N=" + std::to_string(N) + " x=" + format_fixed6(x.convert_to<double>()) + ": " +
                   to_string(r.verdict));
      }
    }
  }
  return check;
}

CheckResult appendix_grid() {
  CheckResult check{"appendix-grid"};
  for (int N = 1; N <= 60; ++N) {
    for (int L = 1; L <= N; ++L) {
      ++check.checks;
      const auto r = binomial_tail_bound_check(N, L);
      if (r.verdict == Verdict::marginal) ++check.marginal;
      if (r.verdict != Verdict::holds) {
        check.fail("N=" + std::to_string(N) + " L=" + std::to_string(L) + ": " + to_string(r.verdict));
      }
    }
  }
  return check;
}

CheckResult theorem_d(const VerifyConfig& config) {
  CheckResult check{"theorem-d"};
  EnumerationOptions options;
  options.workers = config.workers;
  const auto table = count_rich(Alphabet(config.q), config.max_n, options);
  for (int n = 2; n <= config.max_n; ++n) {
    ++check.checks;
    const auto rhs = theorem_d_rhs(n, config.q, table);
    if (table[n] > rhs) check.fail("n=" + std::to_string(n) + ": R_n exceeds the composition sum");
    if (n <= 10) {
      ++check.checks;
      if (theorem_d_terms(n, table) != compositions_bruteforce(n, table)) {
        check.fail("n=" + std::to_string(n) + ": convolution disagrees with composition enumeration");
      }
    }
  }
  return check;
}

CheckResult structural(const VerifyConfig& config) {
  CheckResult check{"structural"};
  EnumerationOptions options;
  options.workers = config.workers;
  const auto table = count_rich(Alphabet(config.q), config.max_n, options);
  for (int n = 0; n < config.max_n; ++n) {
    ++check.checks;
    if (table[n + 1] < table[n]) check.fail("R_" + std::to_string(n + 1) + " < R_" + std::to_string(n));
  }
  std::optional<std::string> printed_direction_fails;
  for (int n = 1; n <= config.max_n; ++n) {
    for (int m = 1; n + m <= config.max_n; ++m) {
      ++check.checks;
      if (table[n + m] > table[n] * table[m]) {
        check.fail("R_" + std::to_string(n + m) + " > R_" + std::to_string(n) + " R_" + std::to_string(m));
      }
      if (!printed_direction_fails && table[n] * table[m] > table[n + m]) {
        printed_direction_fails = "R_" + std::to_string(n) + " R_" + std::to_string(m) + " = " +
                                  to_string(table[n] * table[m]) + " > R_" + std::to_string(n + m) +
                                  " = " + to_string(table[n + m]);
      }
    }
  }
  const auto growth = growth_report(table);
  for (std::size_t i = 2; i < growth.size(); ++i) {
    ++check.checks;
    if (*growth[i].certificate > *growth[i - 1].certificate || *growth[i].certificate < 1.0) {
      check.fail("certificate at n=" + std::to_string(i) + " is increasing or below 1");
    }
  }
  if (printed_direction_fails) {
    check.notes.push_back("super-multiplicative direction fails: " + *printed_direction_fails);
  }
  return check;
}

CheckResult compositions() {
  CheckResult check{"compositions"};
  for (int n = 1; n <= 30; ++n) {
    ++check.checks;
    BigInt total = 0;
    for (int p = 1; p <= n; ++p) total += composition_count(n, p);
    if (total != BigInt(1) << (n - 1)) check.fail("n=" + std::to_string(n) + ": sum over p is not 2^(n-1)");
  }
  // Unit weights turn the composition sum into a plain count.
  CountTable ones{2, std::vector<BigInt>(13, BigInt(1))};
  for (int n = 1; n <= 12; ++n) {
    const auto enumerated = compositions_bruteforce(n, ones);
    for (int p = 1; p <= n; ++p) {
      ++check.checks;
      if (composition_count(n, p) != enumerated[static_cast<std::size_t>(p)]) {
        check.fail("C(" + std::to_string(n - 1) + "," + std::to_string(p - 1) + ") disagrees with enumeration");
      }
    }
  }
  return check;
}

CheckResult prop_e_chain(const VerifyConfig& config) {
  CheckResult check{"prop-e-chain"};
  EnumerationOptions options;
  options.workers = config.workers;
  const auto table = count_rich(Alphabet(config.q), config.max_n, options);
  // R_n <= q^n always, so (h, K) = (q, 1) is a valid hypothesis.
  const GrowthHypothesis hyp{Real(config.q), Real(1)};
  for (int n = 2; n <= config.max_n; ++n) {
    ++check.checks;
    const auto r = prop_e_chain_check(hyp, table, n);
    if (r.applicable != (r.kappa_n <= n) || (r.applicable && !r.holds)) {
      check.fail("n=" + std::to_string(n) + ": chain inequality fails");
    }
  }
  const auto threshold = smallest_applicable_n(config.q);
  std::ostringstream note;
  note << "binomial tail bound first applies (kappa_n <= n) for q=" << config.q << " at n = ceil(e^c) ~ "
       << std::setprecision(6) << threshold.convert_to<double>() << " (" << threshold.str().size()
       << " digits); no desk-scale length qualifies";
  check.notes.push_back(note.str());
  return check;
}

}  // namespace

void CheckResult::fail(std::string what) {
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(what));
}

bool SuiteResult::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

SuiteResult run_oracle_suite(const VerifyConfig& config) {
  return {"oracle",
          {eertree_exhaustive(config), eertree_sampled(config), undo_fuzz(config),
           enumeration_census(config), ups_invariants(config)}};
}

SuiteResult run_lemmas_suite(const VerifyConfig& config) {
  return {"lemmas",
          {theorem_a(config), lemma_c_grid(), theorem_d(config), structural(config), appendix_grid()}};
}

SuiteResult run_appendix_suite(const VerifyConfig& config) {
  return {"appendix", {appendix_grid(), compositions(), prop_e_chain(config)}};
}

std::vector<SuiteResult> run_suites(const std::string& which, const VerifyConfig& config) {
  std::vector<SuiteResult> out;
  if (which == "oracle" || which == "all") out.push_back(run_oracle_suite(config));
  if (which == "lemmas" || which == "all") out.push_back(run_lemmas_suite(config));
  if (which == "appendix" || which == "all") out.push_back(run_appendix_suite(config));
  return out;
}

}  // namespace richwords::cli
