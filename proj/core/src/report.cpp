#include "richwords/report.hpp"

#include <iomanip>
#include <sstream>

namespace richwords {

std::string format_fixed6(std::optional<double> value) {
  if (!value) return {};
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::fixed << std::setprecision(6) << *value;
  return s.str();
}

std::string to_string(const BigInt& value) { return value.str(); }

void write_count_csv(std::ostream& out, const CountTable& table) {
  const auto growth = growth_report(table);
  out << "n,R_n,root\n";
  for (const auto& row : growth) {
    out << row.n << ',' << table[row.n] << ',' << format_fixed6(row.root) << '\n';
  }
}

void write_bounds_csv(std::ostream& out, std::span<const BoundReport> rows) {
  out << "n,q,R_n,p_max,t_min,lemma_b_bound,kappa_n,theorem_d_rhs,root,certificate\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.q << ',' << r.r_n << ',' << r.p_max_observed << ',' << r.t_min << ','
        << r.lemma_b_bound << ',';
    if (r.kappa_n) out << *r.kappa_n;
    out << ',';
    if (r.theorem_d_rhs) out << *r.theorem_d_rhs;
    out << ',' << format_fixed6(r.root) << ',' << format_fixed6(r.certificate) << '\n';
  }
}

}  // namespace richwords
