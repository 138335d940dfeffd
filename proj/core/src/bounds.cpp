#include "richwords/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "richwords/errors.hpp"

namespace richwords {

namespace mp = boost::multiprecision;

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::marginal:
      return "marginal";
    case Verdict::violated:
      return "violated";
  }
  return "?";
}

Verdict compare_relative(const Real& lhs, const Real& rhs, double tolerance) {
  const Real scale = std::max(mp::abs(lhs), mp::abs(rhs));
  if (scale == 0) return Verdict::marginal;
  const Real gap = (rhs - lhs) / scale;
  if (gap > tolerance) return Verdict::holds;
  if (gap < -tolerance) return Verdict::violated;
  return Verdict::marginal;
}

Verdict compare_absolute(const Real& lhs, const Real& rhs, double tolerance) {
  const Real gap = rhs - lhs;
  if (gap > tolerance) return Verdict::holds;
  if (gap < -tolerance) return Verdict::violated;
  return Verdict::marginal;
}

Real constant_c_precise(int q) {
  static_cast<void>(Alphabet{q});
  const Real qq = q;
  const Real own = 8 * qq * mp::sqrt(qq) * mp::log(qq);
  const Real floor_at_nine = Real(8 * 27) * mp::log(Real(9));
  return std::max(own, floor_at_nine);
}

double constant_c(int q) { return constant_c_precise(q).convert_to<double>(); }

std::int64_t kappa(std::int64_t n, int q) {
  if (n < 2) throw DomainError("kappa_n needs n >= 2 (ln n must be positive)");
  const Real x = constant_c_precise(q) * n / mp::log(Real(n));
  const Real nearest = mp::round(x);
  if (mp::abs(x - nearest) <= Real("1e-30") * x) return nearest.convert_to<std::int64_t>();
  return mp::ceil(x).convert_to<std::int64_t>();
}

std::int64_t minimal_t(std::int64_t n, int q) {
  if (n < 0) throw DomainError("minimal_t needs n >= 0");
  static_cast<void>(Alphabet{q});
  std::int64_t t = 0;
  BigInt covered = 0;
  while (covered < n) {
    ++t;
    covered += BigInt(t) * count_palindromes_of_length(static_cast<int>(t), q);
  }
  return t;
}

BigInt lemma_b_bound(std::int64_t n, int q) {
  const auto t = minimal_t(n, q);
  BigInt bound = 0;
  for (std::int64_t i = 1; i <= t; ++i) bound += count_palindromes_of_length(static_cast<int>(i), q);
  return bound;
}

LemmaCCheck check_lemma_c(std::int64_t N, const Real& x) {
  if (N < 1 || x <= 1) throw DomainError("Lemma C needs N >= 1 and x > 1");
  if (N * (x - 1) < 2 * (1 - Real("1e-30"))) throw DomainError("Lemma C needs N(x-1) >= 2");
  Real middle = 0;
  Real power = 1;  // x^{i-1}
  for (std::int64_t i = 1; i <= N; ++i) {
    middle += i * power;
    power *= x;
  }
  // power == x^N here
  LemmaCCheck out;
  out.upper = N * power / (x - 1);
  out.lower = out.upper / 2;
  out.middle = middle;
  const Verdict left = compare_relative(out.lower, out.middle, kLemmaCTolerance);
  const Verdict right = compare_relative(out.middle, out.upper, kLemmaCTolerance);
  out.verdict = std::max(left, right);  // violated > marginal > holds
  return out;
}

LemmaCCheck check_lemma_c(std::int64_t N, double x) { return check_lemma_c(N, Real(x)); }

std::vector<BigInt> theorem_d_terms(std::int64_t n, const CountTable& table) {
  if (n < 1) throw DomainError("theorem_d_terms needs n >= 1");
  const auto half = static_cast<int>((n + 1) / 2);
  if (!table.covers(half)) {
    throw InsufficientDataError("count table must reach length " + std::to_string(half));
  }
  const auto size = static_cast<std::size_t>(n);
  std::vector<BigInt> b(size + 1, 0);
  for (std::size_t m = 1; m <= size; ++m) b[m] = table[static_cast<int>((m + 1) / 2)];

  std::vector<BigInt> terms(size + 1, 0);
  // ways[m]: weighted p-part compositions of m, for the current p.
  std::vector<BigInt> ways = b;
  ways[0] = 0;
  terms[1] = ways[size];
  for (std::size_t p = 2; p <= size; ++p) {
    std::vector<BigInt> next(size + 1, 0);
    for (std::size_t m = p; m <= size; ++m) {
      for (std::size_t last = 1; last + (p - 1) <= m; ++last) next[m] += ways[m - last] * b[last];
    }
    ways = std::move(next);
    terms[p] = ways[size];
  }
  return terms;
}

BigInt theorem_d_rhs(std::int64_t n, int q, const CountTable& table) {
  if (n < 2) throw DomainError("theorem_d_rhs needs n >= 2");
  if (table.q != q) throw DomainError("count table is for a different alphabet size");
  const auto terms = theorem_d_terms(n, table);
  const auto p_limit = std::min(kappa(n, q), n);
  BigInt rhs = 0;
  for (std::int64_t p = 1; p <= p_limit; ++p) rhs += terms[static_cast<std::size_t>(p)];
  return rhs;
}

BigInt binomial(std::int64_t N, std::int64_t k) {
  if (N < 0 || k < 0 || k > N) return 0;
  k = std::min(k, N - k);
  BigInt out = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    out *= N - i;
    out /= i + 1;
  }
  return out;
}

BigInt composition_count(std::int64_t n, std::int64_t p) {
  if (n < 1 || p < 1) throw DomainError("compositions need n >= 1 and p >= 1");
  if (p > n) return 0;
  return binomial(n - 1, p - 1);
}

TailBoundCheck binomial_tail_bound_check(std::int64_t N, std::int64_t L) {
  if (L < 1 || L > N) throw DomainError("binomial tail bound needs 1 <= L <= N");
  TailBoundCheck out;
  BigInt term = 1;  // C(N, k)
  out.lhs = 0;
  for (std::int64_t k = 0; k <= L; ++k) {
    out.lhs += term;
    term = term * (N - k) / (k + 1);
  }
  out.log_lhs = log_of(out.lhs);
  out.log_rhs = L * (1 + mp::log(Real(N)) - mp::log(Real(L)));
  out.verdict = compare_absolute(out.log_lhs, out.log_rhs, kTailBoundTolerance);
  return out;
}

PropEChainCheck prop_e_chain_check(const GrowthHypothesis& hyp, const CountTable& table,
                                   std::int64_t n) {
  if (n < 2) throw DomainError("prop_e_chain_check needs n >= 2");
  if (hyp.h <= 1 || hyp.K < 1) throw InvalidHypothesisError("growth hypothesis needs h > 1, K >= 1");
  if (!table.covers(static_cast<int>(n))) {
    throw InsufficientDataError("count table must reach length " + std::to_string(n));
  }
  const Real log_h = mp::log(hyp.h);
  const Real log_k = mp::log(hyp.K);
  for (int m = 0; m <= n; ++m) {
    if (log_of(table[m]) > log_k + m * log_h) {
      throw InvalidHypothesisError("R_" + std::to_string(m) + " exceeds K h^" + std::to_string(m));
    }
  }
  PropEChainCheck out;
  out.kappa_n = kappa(n, table.q);
  out.log_rn = log_of(table[static_cast<int>(n)]);
  out.applicable = out.kappa_n <= n;
  if (out.applicable) {
    out.log_rhs = prop_e_log_rhs(hyp, n, out.kappa_n);
    out.holds = out.log_rn <= *out.log_rhs;
  }
  return out;
}

Real prop_e_log_rhs(const GrowthHypothesis& hyp, std::int64_t n, std::int64_t k) {
  if (k < 1 || k > n) throw DomainError("chain bound needs 1 <= k <= n");
  const Real kk = k;
  return kk * mp::log(hyp.K) + Real(n + k) / 2 * mp::log(hyp.h) +
         kk * (1 + mp::log(Real(n)) - mp::log(kk));
}

BigInt smallest_applicable_n(int q) {
  static_cast<void>(Alphabet{q});
  // e^c has 207 digits for q <= 9 and 2690 for q = 36; the boundary steps
  // below need every one of them to be exact.
  using Wide = mp::number<mp::cpp_bin_float<3000>>;
  const Wide qq = q;
  const Wide c = std::max(Wide(8 * qq * mp::sqrt(qq) * mp::log(qq)), Wide(216 * mp::log(Wide(9))));
  BigInt n = mp::ceil(mp::exp(c)).convert_to<BigInt>();
  // Settle the boundary exactly: ln n >= c > ln(n - 1).
  while (mp::log(Wide(n)) < c) ++n;
  while (n > 2 && mp::log(Wide(n - 1)) >= c) --n;
  return n;
}

std::vector<GrowthRow> growth_report(const CountTable& table) {
  std::vector<GrowthRow> rows;
  std::optional<double> best;
  for (int n = 0; n <= table.n_max(); ++n) {
    GrowthRow row{n, std::nullopt, std::nullopt};
    if (n >= 1) {
      const double root = mp::exp(log_of(table[n]) / n).convert_to<double>();
      best = best ? std::min(*best, root) : root;
      row.root = root;
      row.certificate = best;
    }
    rows.push_back(row);
  }
  return rows;
}

TheoremACheck verify_theorem_a(const EnumerationStats& stats, int q) {
  TheoremACheck out;
  const double c = constant_c(q);
  for (std::size_t n = 1; n < stats.per_length.size(); ++n) {
    const auto p = stats.per_length[n].p_max;
    const auto len = static_cast<std::int64_t>(n);
    bool ok = BigInt(p) <= lemma_b_bound(len, q);
    out.within_lemma_b = out.within_lemma_b && ok;
    if (n >= 2) {
      const double ratio = static_cast<double>(p) * std::log(static_cast<double>(n)) / static_cast<double>(n);
      if (ratio > out.max_ratio) {
        out.max_ratio = ratio;
        out.argmax_n = static_cast<int>(n);
      }
      const bool in_kappa = static_cast<std::int64_t>(p) <= kappa(len, q);
      out.within_kappa = out.within_kappa && in_kappa;
      ok = ok && in_kappa && ratio <= c;
    }
    if (!ok) out.violations.push_back(static_cast<int>(n));
  }
  out.all_within = out.max_ratio <= c;
  return out;
}

std::vector<BoundReport> bound_reports(const CountTable& table, const EnumerationStats& stats) {
  const auto growth = growth_report(table);
  const double c = constant_c(table.q);
  std::vector<BoundReport> rows;
  for (int n = 0; n <= table.n_max(); ++n) {
    BoundReport row;
    row.q = table.q;
    row.n = n;
    row.c = c;
    row.t_min = minimal_t(n, table.q);
    row.lemma_b_bound = lemma_b_bound(n, table.q);
    if (static_cast<std::size_t>(n) < stats.per_length.size()) {
      row.p_max_observed = stats.per_length[static_cast<std::size_t>(n)].p_max;
    }
    row.r_n = table[n];
    if (n >= 2) {
      row.kappa_n = kappa(n, table.q);
      row.theorem_d_rhs = theorem_d_rhs(n, table.q, table);
    }
    row.root = growth[static_cast<std::size_t>(n)].root;
    row.certificate = growth[static_cast<std::size_t>(n)].certificate;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace richwords
