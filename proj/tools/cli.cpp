#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "richwords/bounds.hpp"
#include "richwords/enumerate.hpp"
#include "richwords/errors.hpp"
#include "richwords/report.hpp"
#include "richwords/rich.hpp"
#include "verify.hpp"

namespace richwords::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

int code(ExitCode c) { return static_cast<int>(c); }

Format resolve_format(const RunConfig& config, Format fallback) {
  if (config.format == "csv") return Format::csv;
  if (config.format == "json") return Format::json;
  if (config.format == "plain") return Format::plain;
  return fallback;
}

Json header(const char* command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string reference_note() {
  std::ostringstream s;
  s << "reference point: R_" << kReferenceLengthBinary << "(2)^(1/" << kReferenceLengthBinary
    << ") < " << kReferenceRootBinary60 << " is known from specialised counting at length "
    << kReferenceLengthBinary << "; that length is out of desk scope and is not recomputed here";
  return s.str();
}

EnumerationOptions enumeration_options(const RunConfig& config) {
  EnumerationOptions options;
  options.mode = config.reduced ? CountMode::symmetry_reduced : CountMode::exact;
  options.workers = config.workers;
  options.node_budget = config.node_budget;
  options.time_budget = std::chrono::duration<double>(config.time_budget_secs);
  return options;
}

// --- analyze ----------------------------------------------------------------

int cmd_analyze(const std::string& text, const RunConfig& config, std::ostream& out) {
  const Word w = Word::parse(text, Alphabet(config.q));
  const auto factors = palindromic_factor_count(w);
  const auto d = static_cast<std::int64_t>(w.size() + 1) - static_cast<std::int64_t>(factors);
  switch (resolve_format(config, Format::plain)) {
    case Format::json: {
      Json j = header("analyze");
      j["word"] = w.to_string();
      j["n"] = w.size();
      j["rich"] = d == 0;
      j["defect"] = d;
      j["palindromic_factors"] = factors;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "word,n,rich,defect,palindromic_factors\n"
          << w.to_string() << ',' << w.size() << ',' << (d == 0 ? "true" : "false") << ',' << d << ','
          << factors << '\n';
      break;
    case Format::plain:
      out << "word: " << w.to_string() << '\n'
          << "n: " << w.size() << '\n'
          << "rich: " << (d == 0 ? "true" : "false") << '\n'
          << "defect: " << d << '\n'
          << "palindromic_factors: " << factors << '\n';
      break;
  }
  return code(ExitCode::ok);
}

// --- factorize --------------------------------------------------------------

int cmd_factorize(const std::string& text, const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  const Word w = Word::parse(text, Alphabet(config.q));
  FactorizationRecord record;
  try {
    record = make_factorization_record(w, config.permissive);
  } catch (const NotRichError& e) {
    err << "error: " << w.to_string() << " is not rich (palindromic defect " << e.defect()
        << "); use --permissive for a greedy palindromic suffix factorization\n";
    return code(ExitCode::failure);
  }
  const char* kind = record.rich ? "UPS-factorization" : "greedy palindromic suffix factorization";
  switch (resolve_format(config, Format::json)) {
    case Format::json: {
      Json j = header("factorize");
      j["kind"] = kind;
      const Json fields = Json::parse(to_json(record));
      for (const auto& [key, value] : fields.items()) j[key] = value;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv: {
      out << "word,n,rich,defect,p,parts\n"
          << w.to_string() << ',' << w.size() << ',' << (record.rich ? "true" : "false") << ','
          << record.defect << ',' << record.factorization.p() << ',';
      const char* sep = "";
      for (const auto& part : record.factorization.parts) {
        out << sep << part.to_string();
        sep = "|";
      }
      out << '\n';
      break;
    }
    case Format::plain: {
      out << kind << ": " << (w.empty() ? "(empty)" : w.to_string()) << " =";
      const char* sep = " ";
      for (const auto& part : record.factorization.parts) {
        out << sep << part.to_string();
        sep = " | ";
      }
      out << "\np = " << record.factorization.p() << '\n';
      break;
    }
  }
  return code(ExitCode::ok);
}

// --- count ------------------------------------------------------------------

void emit_count(const CountTable& table, const RunConfig& config, bool partial, std::ostream& out,
                std::ostream& err) {
  const auto growth = growth_report(table);
  const auto& last = growth.back();
  switch (resolve_format(config, Format::csv)) {
    case Format::csv:
      write_count_csv(out, table);
      if (last.certificate) {
        err << "growth certificate: " << format_fixed6(last.certificate) << " (n = " << last.n << ")\n";
      }
      err << reference_note() << '\n';
      break;
    case Format::json: {
      Json j = header("count");
      j["q"] = config.q;
      j["mode"] = config.reduced ? "reduced" : "exact";
      j["max_n"] = config.max_n;
      j["partial"] = partial;
      Json rows = Json::array();
      for (const auto& row : growth) {
        rows.push_back({{"n", row.n},
                        {"R_n", to_string(table[row.n])},
                        {"root", optional_number(row.root)},
                        {"certificate", optional_number(row.certificate)}});
      }
      j["rows"] = std::move(rows);
      j["certificate"] = {{"n", last.n}, {"value", optional_number(last.certificate)}};
      j["reference"] = reference_note();
      out << j.dump() << '\n';
      break;
    }
    case Format::plain: {
      out << "R_n(" << config.q << "), " << (config.reduced ? "reduced" : "exact") << " mode"
          << (partial ? " (partial)" : "") << '\n';
      for (const auto& row : growth) {
        out << std::setw(4) << row.n << "  " << std::setw(24) << to_string(table[row.n]) << "  "
            << format_fixed6(row.root) << '\n';
      }
      if (last.certificate) {
        out << "growth certificate: " << format_fixed6(last.certificate) << " (n = " << last.n << ")\n";
      }
      out << reference_note() << '\n';
      break;
    }
  }
}

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto table = count_rich(Alphabet(config.q), config.max_n, enumeration_options(config));
    emit_count(table, config, false, out, err);
    return code(ExitCode::ok);
  } catch (const BudgetExceeded& e) {
    emit_count(e.partial(), config, true, out, err);
    err << "partial table: " << e.what() << '\n';
    return code(ExitCode::failure);
  }
}

// --- bounds -----------------------------------------------------------------

int cmd_bounds(const RunConfig& config, std::ostream& out, std::ostream& err) {
  EnumerationResult result;
  try {
    result = enumerate_counts(Alphabet(config.q), config.max_n, enumeration_options(config));
  } catch (const BudgetExceeded& e) {
    err << "partial table: " << e.what() << '\n';
    return code(ExitCode::failure);
  }
  const auto rows = bound_reports(result.table, result.stats);
  const auto theorem_a = verify_theorem_a(result.stats, config.q);
  bool ok = theorem_a.all_within && theorem_a.within_kappa && theorem_a.within_lemma_b;
  std::vector<int> failed;
  for (const auto& row : rows) {
    if (!row.all_hold()) failed.push_back(row.n);
  }
  ok = ok && failed.empty();

  std::ostringstream summary;
  summary << "max p_max(n) ln n / n = " << format_fixed6(theorem_a.max_ratio) << " (n = "
          << theorem_a.argmax_n << "), c = " << format_fixed6(constant_c(config.q)) << "; "
          << (ok ? "all bounds hold" : "bound violated");

  switch (resolve_format(config, Format::csv)) {
    case Format::csv:
      write_bounds_csv(out, rows);
      err << summary.str() << '\n';
      break;
    case Format::json: {
      Json j = header("bounds");
      j["q"] = config.q;
      j["c"] = constant_c(config.q);
      Json list = Json::array();
      for (const auto& r : rows) {
        list.push_back({{"n", r.n},
                        {"R_n", to_string(r.r_n)},
                        {"p_max", r.p_max_observed},
                        {"t_min", r.t_min},
                        {"lemma_b_bound", to_string(r.lemma_b_bound)},
                        {"kappa_n", r.kappa_n ? Json(*r.kappa_n) : Json(nullptr)},
                        {"theorem_d_rhs", r.theorem_d_rhs ? Json(to_string(*r.theorem_d_rhs)) : Json(nullptr)},
                        {"root", optional_number(r.root)},
                        {"certificate", optional_number(r.certificate)},
                        {"holds", r.all_hold()}});
      }
      j["rows"] = std::move(list);
      j["max_ratio"] = theorem_a.max_ratio;
      j["all_hold"] = ok;
      out << j.dump() << '\n';
      break;
    }
    case Format::plain: {
      std::ostringstream csv;
      write_bounds_csv(csv, rows);
      out << csv.str() << summary.str() << '\n';
      break;
    }
  }
  for (int n : failed) err << "bound violated at n = " << n << '\n';
  return code(ok ? ExitCode::ok : ExitCode::failure);
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const std::string& suite, const RunConfig& config, std::ostream& out) {
  VerifyConfig vc;
  vc.q = config.q;
  vc.max_n = config.max_n;
  vc.seed = config.seed;
  vc.workers = config.workers;
  const auto suites = run_suites(suite, vc);
  bool ok = true;
  std::uint64_t total_checks = 0;
  std::uint64_t total_failures = 0;
  const auto format = resolve_format(config, Format::plain);
  Json j = header("verify");
  j["suite"] = suite;
  j["q"] = config.q;
  j["max_n"] = config.max_n;
  j["seed"] = config.seed;
  Json suite_list = Json::array();
  for (const auto& s : suites) {
    ok = ok && s.passed();
    if (format == Format::plain) out << "suite " << s.name << '\n';
    Json checks = Json::array();
    for (const auto& c : s.checks) {
      total_checks += c.checks;
      total_failures += c.failures;
      switch (format) {
        case Format::plain:
          out << "  " << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << c.checks << " checks, "
              << c.failures << " failures, " << c.marginal << " marginal\n";
          for (const auto& note : c.notes) out << "    note: " << note << '\n';
          for (const auto& ce : c.counterexamples) out << "    counterexample: " << ce << '\n';
          break;
        case Format::csv:
          if (total_checks == c.checks && &s == &suites.front()) {
            out << "suite,check,checks,failures,marginal\n";
          }
          out << s.name << ',' << c.name << ',' << c.checks << ',' << c.failures << ',' << c.marginal << '\n';
          break;
        case Format::json:
          checks.push_back({{"name", c.name},
                            {"checks", c.checks},
                            {"failures", c.failures},
                            {"marginal", c.marginal},
                            {"notes", c.notes},
                            {"counterexamples", c.counterexamples}});
          break;
      }
    }
    suite_list.push_back({{"name", s.name}, {"passed", s.passed()}, {"checks", std::move(checks)}});
  }
  if (format == Format::plain) {
    out << "total: " << total_checks << " checks, " << total_failures << " failures\n";
  } else if (format == Format::json) {
    j["suites"] = std::move(suite_list);
    j["total_checks"] = total_checks;
    j["total_failures"] = total_failures;
    j["passed"] = ok;
    out << j.dump() << '\n';
  }
  return code(ok ? ExitCode::ok : ExitCode::failure);
}

void add_output_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--q", config.q, "Alphabet size")->check(CLI::Range(2, 36));
  cmd->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "plain"}));
  cmd->add_option("--out", config.out_path, "Write output to PATH instead of stdout");
}

void add_enumeration_options(CLI::App* cmd, RunConfig& config, std::string& mode) {
  cmd->add_option("--max-n", config.max_n, "Largest word length")->check(CLI::NonNegativeNumber);
  cmd->add_option("--mode", mode, "exact or reduced (letter-permutation symmetry)")
      ->check(CLI::IsMember({"exact", "reduced"}));
  cmd->add_option("--workers", config.workers, "Worker threads")
      ->envname("RICHLANG_WORKERS")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--node-budget", config.node_budget, "Stop after this many nodes (0 = unlimited)");
  cmd->add_option("--time-budget-secs", config.time_budget_secs, "Wall-clock cap (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"richlang: rich words, UPS-factorizations and counts of rich words"};
  app.name("richlang");
  app.require_subcommand(1);

  RunConfig config;
  std::string mode = "exact";
  std::string word_text;
  std::string suite = "all";

  auto* analyze = app.add_subcommand("analyze", "Richness, defect and palindromic factor count of a word");
  analyze->add_option("word", word_text, "Word over a-z0-9")->required();
  add_output_options(analyze, config);

  auto* factorize = app.add_subcommand("factorize", "UPS-factorization of a rich word");
  factorize->add_option("word", word_text, "Word over a-z0-9")->required();
  factorize->add_flag("--permissive", config.permissive,
                      "Factorize non-rich words greedily (parts may repeat)");
  add_output_options(factorize, config);

  auto* count = app.add_subcommand("count", "Count rich words of each length");
  add_output_options(count, config);
  add_enumeration_options(count, config, mode);

  auto* bounds = app.add_subcommand("bounds", "Check part-count and counting bounds against exact counts");
  add_output_options(bounds, config);
  add_enumeration_options(bounds, config, mode);

  auto* verify = app.add_subcommand("verify", "Run property suites against brute-force oracles");
  verify->add_option("suite", suite, "oracle, lemmas, appendix or all")
      ->check(CLI::IsMember({"oracle", "lemmas", "appendix", "all"}));
  add_output_options(verify, config);
  add_enumeration_options(verify, config, mode);
  verify->add_option("--seed", config.seed, "Seed for sampled checks");

  std::vector<std::string> storage{"richlang"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    // verify defaults to a longer range than count/bounds
    if (!args.empty() && args.front() == "verify") config.max_n = 12;
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? code(ExitCode::ok) : code(ExitCode::usage);
  }
  config.reduced = mode == "reduced";

  std::ofstream file;
  if (!config.out_path.empty()) {
    file.open(config.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << config.out_path << " for writing\n";
      return code(ExitCode::usage);
    }
  }
  std::ostream& sink = config.out_path.empty() ? out : file;

  try {
    if (*analyze) return cmd_analyze(word_text, config, sink);
    if (*factorize) return cmd_factorize(word_text, config, sink, err);
    if (*count) return cmd_count(config, sink, err);
    if (*bounds) return cmd_bounds(config, sink, err);
    if (*verify) return cmd_verify(suite, config, sink);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return code(ExitCode::usage);
  } catch (const AlphabetError& e) {
    err << "error: " << e.what() << '\n';
    return code(ExitCode::usage);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return code(ExitCode::failure);
  }
  return code(ExitCode::usage);
}

}  // namespace richwords::cli
