#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "richwords/enumerate.hpp"
#include "richwords/numeric.hpp"

namespace richwords {

/// Outcome of a real-valued inequality check. Results within the tolerance
/// band around equality are `marginal` rather than pass/fail.
enum class Verdict { holds, marginal, violated };

const char* to_string(Verdict v) noexcept;

/// Classifies `lhs <= rhs` with a relative tolerance.
Verdict compare_relative(const Real& lhs, const Real& rhs, double tolerance);
/// Classifies `lhs <= rhs` with an absolute tolerance.
Verdict compare_absolute(const Real& lhs, const Real& rhs, double tolerance);

// ---------------------------------------------------------------------------
// Part-count bounds for UPS-factorizations.

/// max(8 q^{3/2} ln q, 8 * 9^{3/2} ln 9).
Real constant_c_precise(int q);
double constant_c(int q);

/// ceil(c n / ln n) for n >= 2. Values within 1e-30 (relative) of an integer
/// are taken to be that integer, so exact cases like q = 16, n = 2 are not
/// pushed up by rounding noise. Throws DomainError for n < 2.
std::int64_t kappa(std::int64_t n, int q);

/// Smallest t >= 0 with sum_{i=1}^t i q^ceil(i/2) >= n. Exact arithmetic.
std::int64_t minimal_t(std::int64_t n, int q);

/// sum_{i=1}^t q^ceil(i/2) with t = minimal_t(n, q).
BigInt lemma_b_bound(std::int64_t n, int q);

/// Three-part comparison N x^N / (2(x-1)) <= sum_{i=1}^N i x^{i-1} <= N x^N / (x-1).
struct LemmaCCheck {
  Real lower;
  Real middle;
  Real upper;
  Verdict verdict;

  bool holds() const noexcept { return verdict == Verdict::holds; }
};

inline constexpr double kLemmaCTolerance = 1e-9;

/// Requires N >= 1, x > 1 and N(x-1) >= 2 (up to 1e-30 relative slack for
/// decimal grid points); throws DomainError otherwise.
LemmaCCheck check_lemma_c(std::int64_t N, const Real& x);
LemmaCCheck check_lemma_c(std::int64_t N, double x);

// ---------------------------------------------------------------------------
// Counting recurrences.

/// Inner sums of the part-count recurrence, indexed by p = 0..n (entry 0 is
/// zero): sum over compositions n_1 + ... + n_p = n of prod R_ceil(n_i/2).
/// Computed by p-fold convolution of b_m = R_ceil(m/2).
/// Throws InsufficientDataError if the table stops before ceil(n/2).
std::vector<BigInt> theorem_d_terms(std::int64_t n, const CountTable& table);

/// sum_{p=1}^{min(kappa_n, n)} of theorem_d_terms. Terms with p > n are
/// empty sums, so the truncation at n is exact. Requires n >= 2 and
/// table.q == q.
BigInt theorem_d_rhs(std::int64_t n, int q, const CountTable& table);

/// C(n-1, p-1): compositions of n into p positive parts; 0 when p > n.
BigInt composition_count(std::int64_t n, std::int64_t p);

/// Exact C(N, k).
BigInt binomial(std::int64_t N, std::int64_t k);

struct TailBoundCheck {
  BigInt lhs;     ///< sum_{k=0}^L C(N, k)
  Real log_lhs;
  Real log_rhs;   ///< L (1 + ln N - ln L)
  Verdict verdict;

  bool holds() const noexcept { return verdict == Verdict::holds; }
};

inline constexpr double kTailBoundTolerance = 1e-9;

/// sum_{k=0}^L C(N, k) <= (eN/L)^L, compared in log space.
/// Requires 1 <= L <= N; throws DomainError otherwise.
TailBoundCheck binomial_tail_bound_check(std::int64_t N, std::int64_t L);

/// R_n <= K h^n assumed for every n.
struct GrowthHypothesis {
  Real h;
  Real K;
};

struct PropEChainCheck {
  /// kappa_n <= n, the range where the binomial tail bound may be applied
  /// with L = kappa_n, N = n.
  bool applicable = false;
  /// R_n <= K^k h^{(n+k)/2} (e n / k)^k with k = kappa_n. False when not
  /// applicable.
  bool holds = false;
  std::int64_t kappa_n = 0;
  Real log_rn;
  std::optional<Real> log_rhs;
};

/// Throws InvalidHypothesisError if h <= 1, K < 1 or R_m > K h^m for some
/// m <= n in `table`; InsufficientDataError if the table stops before n.
PropEChainCheck prop_e_chain_check(const GrowthHypothesis& hyp, const CountTable& table,
                                   std::int64_t n);

/// ln of K^k h^{(n+k)/2} (e n / k)^k, the right-hand side of the chain
/// bound with k parts. Requires 1 <= k <= n.
Real prop_e_log_rhs(const GrowthHypothesis& hyp, std::int64_t n, std::int64_t k);

/// Smallest n >= 2 with kappa(n, q) <= n. Since ceil(c n / ln n) <= n iff
/// ln n >= c, this is ceil(e^c), a number with more than 200 digits.
BigInt smallest_applicable_n(int q);

// ---------------------------------------------------------------------------
// Growth rate.

struct GrowthRow {
  int n;
  std::optional<double> root;         ///< R_n^{1/n}; absent for n = 0
  std::optional<double> certificate;  ///< min_{1<=m<=n} R_m^{1/m}
};

/// Roots and running-minimum certificates. For a factorial language every
/// certificate is an upper bound on lim R_n^{1/n}.
std::vector<GrowthRow> growth_report(const CountTable& table);

/// Reference value reported alongside desk-scale certificates: the 60th
/// root of R_60(2) lies below this. Not recomputed here.
inline constexpr double kReferenceRootBinary60 = 1.605;
inline constexpr int kReferenceLengthBinary = 60;

// ---------------------------------------------------------------------------
// Executed part-count checks.

struct TheoremACheck {
  double max_ratio = 0.0;        ///< max_{n>=2} p_max(n) ln n / n
  int argmax_n = 0;
  bool all_within = true;        ///< max_ratio <= c
  bool within_kappa = true;      ///< p_max(n) <= kappa_n for n >= 2
  bool within_lemma_b = true;    ///< p_max(n) <= lemma_b_bound(n) for n >= 1
  std::vector<int> violations;   ///< lengths where any check failed
};

TheoremACheck verify_theorem_a(const EnumerationStats& stats, int q);

struct BoundReport {
  int q = 2;
  int n = 0;
  double c = 0.0;
  std::optional<std::int64_t> kappa_n;
  std::int64_t t_min = 0;
  BigInt lemma_b_bound;
  std::size_t p_max_observed = 0;
  std::optional<BigInt> theorem_d_rhs;
  BigInt r_n;
  std::optional<double> root;
  std::optional<double> certificate;

  bool p_within_lemma_b() const { return BigInt(p_max_observed) <= lemma_b_bound; }
  bool p_within_kappa() const {
    return !kappa_n || static_cast<std::int64_t>(p_max_observed) <= *kappa_n;
  }
  bool r_within_theorem_d() const { return !theorem_d_rhs || r_n <= *theorem_d_rhs; }
  bool all_hold() const { return p_within_lemma_b() && p_within_kappa() && r_within_theorem_d(); }
};

/// One row per length in `table`.
std::vector<BoundReport> bound_reports(const CountTable& table, const EnumerationStats& stats);

}  // namespace richwords
