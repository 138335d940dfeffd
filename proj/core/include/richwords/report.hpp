#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "richwords/bounds.hpp"
#include "richwords/enumerate.hpp"

namespace richwords {

/// Fixed-point rendering with six decimals; empty for a missing value.
std::string format_fixed6(std::optional<double> value);

std::string to_string(const BigInt& value);

/// Header `n,R_n,root`, one row per length; root empty for n = 0.
void write_count_csv(std::ostream& out, const CountTable& table);

/// Header `n,q,R_n,p_max,t_min,lemma_b_bound,kappa_n,theorem_d_rhs,root,certificate`.
/// kappa_n and theorem_d_rhs are empty for n < 2.
void write_bounds_csv(std::ostream& out, std::span<const BoundReport> rows);

}  // namespace richwords
