#pragma once

// Command-line front end for the kbonacci tool. Kept as a header so the test
// suite can drive run() with captured streams.
//
// Exit codes: 0 success or pass, 1 verification failure, 2 usage or domain error.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kbonacci/kbonacci.hpp"

namespace kbonacci::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// "a..b" (inclusive) or a single integer "a".
inline IntRange parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw DomainError("bad range \"" + text + "\", expected a..b");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = to_int(text);
    return {v, v};
  }
  IntRange r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (r.empty()) throw DomainError("empty range \"" + text + "\"");
  return r;
}

inline Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "latex") return Format::latex;
  if (name == "json") return Format::json;
  throw DomainError("unknown format \"" + name + "\"");
}

inline std::vector<BigInt> parse_initial(const std::vector<std::string>& fields) {
  std::vector<BigInt> values;
  for (const auto& f : fields) {
    BigInt v;
    if (!parse_decimal(f, v)) throw DomainError("bad initial value \"" + f + "\"");
    values.push_back(std::move(v));
  }
  return values;
}

inline RecurrenceSpec make_spec(int k, const std::vector<std::string>& init) {
  if (init.empty()) return RecurrenceSpec(k);
  return RecurrenceSpec(k, parse_initial(init));
}

namespace detail {

struct Outcome {
  std::string output;
  int code = kExitPass;
};

inline std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

inline Outcome seq_command(int k, const std::vector<std::string>& init, int terms, Format format) {
  if (terms < 1) throw DomainError("--terms must be at least 1");
  const Sequence seq = generate(make_spec(k, init), static_cast<std::size_t>(terms));
  if (format == Format::json) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& t : seq.terms()) values.push_back(to_decimal(t));
    return {nlohmann::json{{"k", k}, {"terms", std::move(values)}}.dump(2) + "\n"};
  }
  std::ostringstream out;
  for (std::size_t n = 0; n < seq.size(); ++n) out << n << ' ' << seq[n] << '\n';
  return {out.str()};
}

inline Outcome verify_numeric_command(IntRange ks, int m_max, Format format) {
  if (m_max < 0) throw DomainError("--m-max must be non-negative");
  require_order(ks.lo);
  const auto report = verify_numeric(ks, static_cast<std::size_t>(m_max));
  const int code = report.passed() ? kExitPass : kExitFail;
  if (format == Format::json) return {to_json(report).dump(2) + "\n", code};
  std::ostringstream out;
  out << "verify-numeric k=" << ks.lo << ".." << ks.hi << " m=0.." << m_max << ": "
      << (report.passed() ? "pass" : "fail") << " (" << report.checks << " checks, " << report.failures.size()
      << " failures)\n";
  for (const auto& f : report.failures) out << "  k=" << f.k << " m=" << f.m << " lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
  return {out.str(), code};
}

inline Outcome verify_symbolic_command(bool concrete, IntRange ks, Format format) {
  require_order(ks.lo);
  const auto ledger = build_ledger();
  const auto parametric = verify_parametric(ledger);
  std::optional<ConcreteReport> concrete_report;
  if (concrete) concrete_report = verify_concrete(ks, ledger);
  const bool passed = parametric.passed() && (!concrete_report || concrete_report->passed());
  const int code = passed ? kExitPass : kExitFail;

  if (format == Format::json) {
    nlohmann::json doc{{"status", passed ? "pass" : "fail"}, {"parametric", to_json(parametric)}};
    if (concrete_report) doc["concrete"] = to_json(*concrete_report);
    return {doc.dump(2) + "\n", code};
  }
  std::ostringstream out;
  out << "parametric: " << (parametric.passed() ? "pass" : "fail") << '\n';
  for (const auto& row : parametric.rows) {
    out << "  row " << to_string(row.set) << ": N' = " << row.computed << "  (expected " << row.expected << ") "
        << (row.ok() ? "ok" : "FAIL") << '\n';
  }
  if (concrete_report) {
    out << "concrete k=" << ks.lo << ".." << ks.hi << ": " << (concrete_report->passed() ? "pass" : "fail") << " ("
        << concrete_report->cells_checked << " cells)\n";
    for (const auto& m : concrete_report->mismatches) {
      out << "  k=" << m.k << " (" << m.i << "," << m.j << ") set " << to_string(m.set) << ": ledger " << m.ledger
          << " vs expansion " << m.oracle << '\n';
    }
    for (const auto& m : concrete_report->conclusion_failures) {
      out << "  k=" << m.k << " (" << m.i << "," << m.j << "): N' = " << m.value << ", expected " << m.expected << '\n';
    }
  }
  out << "status: " << (passed ? "pass" : "fail") << '\n';
  return {out.str(), code};
}

inline Outcome verify_constant_command(int k, const std::vector<std::string>& init, IntRange probes, Format format) {
  const auto report = base_constant(make_spec(k, init), probes);
  const int code = report.constant() ? kExitPass : kExitFail;
  if (format == Format::json) return {to_json(report).dump(2) + "\n", code};
  std::ostringstream out;
  const Rational v = report.value();
  out << "k=" << k << " probes m=" << probes.lo << ".." << probes.hi << ": constant = " << report.numerator() << "/"
      << report.denominator << " (= " << v << ")";
  if (report.constant()) {
    out << ", identical at every probe\n";
  } else {
    out << ", NOT constant: first deviation at m=" << *report.first_deviation() << '\n';
  }
  return {out.str(), code};
}

inline Outcome oeis_command(int k, const std::string& path, int terms, Format format) {
  if (terms < 1) throw DomainError("--terms must be at least 1");
  const BFile bfile = read_bfile(path);
  const Sequence seq = generate(RecurrenceSpec(k), static_cast<std::size_t>(terms));
  const auto report = crosscheck(seq, bfile, static_cast<std::size_t>(terms));
  const int code = report.agree() ? kExitPass : kExitFail;
  if (format == Format::json) {
    nlohmann::json doc{{"k", k}, {"bfile", path}, {"terms", terms}, {"status", report.agree() ? "agree" : "mismatch"}};
    if (!report.agree()) {
      doc["first_mismatch"] = *report.first_mismatch;
      doc["generated"] = to_decimal(report.generated);
      doc["bfile_value"] = to_decimal(report.expected);
    }
    return {doc.dump(2) + "\n", code};
  }
  std::ostringstream out;
  if (report.agree()) {
    out << "k=" << k << " agrees with " << path << " on " << terms << " terms\n";
  } else {
    out << "k=" << k << " differs from " << path << " at index " << *report.first_mismatch << ": generated "
        << report.generated << ", b-file " << report.expected << '\n';
  }
  return {out.str(), code};
}

}  // namespace detail

/// Runs one command line (without the program name). Primary output goes to
/// `out` (or the --out file), diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of squares of k-bonacci numbers: generate, render and verify the closed form", "kbonacci"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write primary output to PATH instead of standard out");

  int k = 0;
  int terms = 0;
  int m_max = 200;
  std::string format_name = "text";
  std::string k_range_text;
  std::string probes_text = "1..30";
  std::string target_name;
  std::string bfile_path;
  std::vector<std::string> init;
  bool parametric = false;
  bool concrete = false;

  const auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "text|latex|json")->check(CLI::IsMember({"text", "latex", "json"}));
  };
  const auto order_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--k", k, "Recurrence order k >= 2")->check(CLI::Range(2, 100000));
    if (required) opt->required();
  };

  auto* seq = app.add_subcommand("seq", "Print the first terms of a k-bonacci sequence");
  order_opt(seq, true);
  seq->add_option("--init", init, "Initial terms a,b,... (k of them)")->delimiter(',');
  seq->add_option("--terms", terms, "Number of terms")->default_val(20);
  format_opt(seq);

  auto* coeffs = app.add_subcommand("coeffs", "Print the coefficient table N_{i,j}, D_k and the constant");
  order_opt(coeffs, true);
  format_opt(coeffs);

  auto* identity = app.add_subcommand("identity", "Print the closed-form identity for one k");
  order_opt(identity, true);
  format_opt(identity);

  auto* tables = app.add_subcommand("tables", "Render a coefficient table or the contribution ledger");
  tables->add_option("--target", target_name, "diag|offdiag|ledger-symbolic|ledger-evaluated")
      ->required()
      ->check(CLI::IsMember({"diag", "offdiag", "ledger-symbolic", "ledger-evaluated"}));
  tables->add_option("--k", k, "Order (largest order for diag)")->default_val(6)->check(CLI::Range(2, 100000));
  format_opt(tables);

  auto* vnum = app.add_subcommand("verify-numeric", "Check the cleared identity exactly over a (k, m) sweep");
  vnum->add_option("--k", k_range_text, "Order range a..b")->default_val("2..12");
  vnum->add_option("--m-max", m_max, "Largest m")->default_val(200)->check(CLI::NonNegativeNumber);
  format_opt(vnum);

  auto* vsym = app.add_subcommand("verify-symbolic", "Check the coefficient ledger (parametric, optionally concrete)");
  vsym->add_flag("--parametric", parametric, "Polynomial row sums (always run)");
  vsym->add_flag("--concrete", concrete, "Also compare against direct expansion for each k in --k");
  vsym->add_option("--k", k_range_text, "Order range for --concrete")->default_val("2..10");
  format_opt(vsym);

  auto* vconst = app.add_subcommand("verify-constant", "Measure the constant term at each probe m");
  order_opt(vconst, true);
  vconst->add_option("--init", init, "Initial terms a,b,... (k of them)")->delimiter(',');
  vconst->add_option("--probes", probes_text, "Probe range a..b of m")->default_val("1..30");
  format_opt(vconst);

  auto* oeis = app.add_subcommand("oeis-check", "Compare a generated sequence with an OEIS b-file");
  order_opt(oeis, true);
  oeis->add_option("--bfile", bfile_path, "Path to b-file")->required();
  oeis->add_option("--terms", terms, "Number of leading terms to compare")->default_val(30);
  format_opt(oeis);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  detail::Outcome outcome;
  try {
    const Format format = parse_format(format_name);
    if (seq->parsed()) {
      outcome = detail::seq_command(k, init, terms, format);
    } else if (coeffs->parsed()) {
      outcome = {detail::with_newline(render_coefficients(k, format))};
    } else if (identity->parsed()) {
      outcome = {detail::with_newline(render_identity(k, format))};
    } else if (tables->parsed()) {
      RenderRequest request{RenderTarget::diag_table, k, format};
      if (target_name == "offdiag") request.target = RenderTarget::offdiag_table;
      if (target_name == "ledger-symbolic") request.target = RenderTarget::ledger_symbolic;
      if (target_name == "ledger-evaluated") request.target = RenderTarget::ledger_evaluated;
      outcome = {detail::with_newline(render_table(request))};
    } else if (vnum->parsed()) {
      outcome = detail::verify_numeric_command(parse_range(k_range_text), m_max, format);
    } else if (vsym->parsed()) {
      (void)parametric;
      outcome = detail::verify_symbolic_command(concrete, parse_range(k_range_text), format);
    } else if (vconst->parsed()) {
      outcome = detail::verify_constant_command(k, init, parse_range(probes_text), format);
    } else if (oeis->parsed()) {
      outcome = detail::oeis_command(k, bfile_path, terms, format);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    file << outcome.output;
  } else {
    out << outcome.output;
  }
  return outcome.code;
}

}  // namespace kbonacci::cli
