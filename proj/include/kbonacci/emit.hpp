#pragma once

/**
 * @file emit.hpp
 * @brief Text, LaTeX and JSON renderings of identities, coefficient tables
 *        and the contribution ledger.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kbonacci/coefficients.hpp"
#include "kbonacci/error.hpp"
#include "kbonacci/symbolic.hpp"

namespace kbonacci {

enum class Format { text, latex, json };

enum class RenderTarget { identity, diag_table, offdiag_table, ledger_symbolic, ledger_evaluated };

struct RenderRequest {
  RenderTarget target = RenderTarget::identity;
  int k = 0;  ///< order; for diag_table the largest order K shown
  Format format = Format::text;
};

inline std::string to_string(Format f) {
  switch (f) {
    case Format::text: return "text";
    case Format::latex: return "latex";
    case Format::json: return "json";
  }
  return "?";
}

inline std::string to_string(RenderTarget t) {
  switch (t) {
    case RenderTarget::identity: return "identity";
    case RenderTarget::diag_table: return "diag_table";
    case RenderTarget::offdiag_table: return "offdiag_table";
    case RenderTarget::ledger_symbolic: return "ledger_symbolic";
    case RenderTarget::ledger_evaluated: return "ledger_evaluated";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Identity

struct IdentityTerm {
  int i;
  int j;
  std::int64_t coefficient;
};

/// Nonzero terms, diagonal squares first, then off-diagonal products by (i, j).
inline std::vector<IdentityTerm> identity_terms(const CoefficientTable& table) {
  std::vector<IdentityTerm> terms;
  for (int i = 0; i < table.k(); ++i) {
    if (table.at(i, i) != 0) terms.push_back({i, i, table.at(i, i)});
  }
  table.for_each([&](int i, int j, std::int64_t n) {
    if (i != j && n != 0) terms.push_back({i, j, n});
  });
  return terms;
}

namespace detail {

inline std::string g_text(int offset) { return offset == 0 ? "G_m" : "G_{m+" + std::to_string(offset) + "}"; }

inline std::string product_text(int i, int j) {
  if (i == j) return g_text(i) + "^2";
  return g_text(i) + " " + g_text(j);
}

/// Joins signed terms "a - b + c"; `body` is the unsigned rendering of each.
inline void append_signed(std::string& out, std::int64_t value, const std::string& body, bool first) {
  const std::int64_t magnitude = value < 0 ? -value : value;
  if (first) {
    if (value < 0) out += "-";
  } else {
    out += value < 0 ? " - " : " + ";
  }
  if (body.empty()) {
    out += std::to_string(magnitude);
  } else {
    if (magnitude != 1) out += std::to_string(magnitude) + " ";
    out += body;
  }
}

inline std::string poly_latex(const Poly& p) {
  std::string s = p.to_string();
  s.erase(std::remove(s.begin(), s.end(), '*'), s.end());
  return s;
}

}  // namespace detail

inline nlohmann::json identity_json(const CoefficientTable& table) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : identity_terms(table)) terms.push_back({{"i", t.i}, {"j", t.j}, {"coefficient", t.coefficient}});
  return {{"k", table.k()},
          {"denominator", table.denominator()},
          {"terms", std::move(terms)},
          {"constant", table.cleared_constant()}};
}

/// sum_{i=0}^{m} G_i^2 = (1/D_k)(sum N_{i,j} G_{m+i} G_{m+j} + c), c = -N_{k-1,k-1}.
/// When D_k divides every coefficient and the constant, the fraction is cleared.
inline std::string render_identity(const CoefficientTable& table, Format format) {
  if (format == Format::json) return identity_json(table).dump(2);

  const auto terms = identity_terms(table);
  const std::int64_t constant = table.cleared_constant();
  const std::int64_t denominator = table.denominator();
  bool reducible = denominator != 0 && constant % denominator == 0;
  for (const auto& t : terms) reducible = reducible && t.coefficient % denominator == 0;
  const std::int64_t scale = reducible ? denominator : 1;

  const bool latex = format == Format::latex;
  std::string body;
  bool first = true;
  for (const auto& t : terms) {
    detail::append_signed(body, t.coefficient / scale, detail::product_text(t.i, t.j), first);
    first = false;
  }
  if (constant != 0) {
    detail::append_signed(body, constant / scale, "", first);
    first = false;
  }
  if (first) body = "0";

  std::string out = latex ? "\\sum_{i=0}^{m} G_i^2 = " : "sum_{i=0}^{m} G_i^2 = ";
  if (reducible) return out + body;
  const std::string den = std::to_string(denominator);
  if (latex) return out + "\\frac{1}{" + den + "}\\left(" + body + "\\right)";
  return out + "(1/" + den + ")(" + body + ")";
}

inline std::string render_identity(int k, Format format) { return render_identity(build_table(k), format); }

// ---------------------------------------------------------------------------
// Coefficient table JSON

inline nlohmann::json to_json(const CoefficientTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  table.for_each([&](int i, int j, std::int64_t n) { entries.push_back({{"i", i}, {"j", j}, {"value", n}}); });
  return {{"k", table.k()},
          {"denominator", table.denominator()},
          {"cleared_constant", table.cleared_constant()},
          {"entries", std::move(entries)}};
}

inline CoefficientTable table_from_json(const nlohmann::json& doc) {
  const int k = doc.at("k").get<int>();
  require_order(k);
  std::vector<std::int64_t> zeros(CoefficientTable::cell_count(k), 0);
  CoefficientTable table(k, doc.at("denominator").get<std::int64_t>(), std::move(zeros));
  std::size_t seen = 0;
  for (const auto& e : doc.at("entries")) {
    table.set(e.at("i").get<int>(), e.at("j").get<int>(), e.at("value").get<std::int64_t>());
    ++seen;
  }
  if (seen != table.size()) throw FormatError("coefficient table JSON has " + std::to_string(seen) + " entries");
  if (doc.contains("cleared_constant") && doc.at("cleared_constant").get<std::int64_t>() != table.cleared_constant()) {
    throw FormatError("cleared_constant disagrees with -N_{k-1,k-1}");
  }
  return table;
}

// ---------------------------------------------------------------------------
// Tables

namespace detail {

using Grid = std::vector<std::vector<std::string>>;

inline std::string grid_text(const Grid& grid) {
  std::vector<std::size_t> widths;
  for (const auto& row : grid) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      if (c != 0) line += " | ";
      line += grid[r][c] + std::string(widths[c] - grid[r][c].size(), ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < widths.size(); ++c) total += widths[c] + (c == 0 ? 0 : 3);
      out << std::string(total, '-') << '\n';
    }
  }
  return out.str();
}

/// Cells are emitted as-is; callers wrap math in $...$.
inline std::string grid_latex(const Grid& grid) {
  const std::size_t columns = grid.empty() ? 0 : grid.front().size();
  std::ostringstream out;
  out << "\\begin{tabular}{|";
  for (std::size_t c = 0; c < columns; ++c) out << "c|";
  out << "}\n\\hline\n";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t c = 0; c < grid[r].size(); ++c) out << (c == 0 ? "" : " & ") << grid[r][c];
    out << " \\\\\n";
    if (r == 0) out << "\\hline\n";
  }
  out << "\\hline\n\\end{tabular}\n";
  return out.str();
}

inline std::string math(const std::string& s, bool latex) {
  if (!latex || s.empty()) return s;
  return "$" + s + "$";
}

inline std::string render_grid(const Grid& grid, Format format) {
  return format == Format::latex ? grid_latex(grid) : grid_text(grid);
}

}  // namespace detail

/// Diagonal coefficients N_{i,i} for k = 2..K.
inline std::string render_diag_table(int max_k, Format format) {
  require_order(max_k);
  if (format == Format::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 2; k <= max_k; ++k) {
      const auto table = build_table(k);
      nlohmann::json diag = nlohmann::json::array();
      for (int i = 0; i < k; ++i) diag.push_back(table.at(i, i));
      rows.push_back({{"k", k}, {"diagonal", std::move(diag)}});
    }
    return nlohmann::json{{"target", "diag_table"}, {"max_k", max_k}, {"rows", std::move(rows)}}.dump(2);
  }
  const bool latex = format == Format::latex;
  detail::Grid grid{{""}};
  for (int i = 0; i < max_k; ++i) grid[0].push_back(detail::math("i=" + std::to_string(i), latex));
  for (int k = 2; k <= max_k; ++k) {
    const auto table = build_table(k);
    std::vector<std::string> row{detail::math("k=" + std::to_string(k), latex)};
    for (int i = 0; i < max_k; ++i) row.push_back(i < k ? detail::math(std::to_string(table.at(i, i)), latex) : "");
    grid.push_back(std::move(row));
  }
  return detail::render_grid(grid, format);
}

/// Off-diagonal coefficients N_{i,j}, i < j, for one k. The JSON form carries
/// the whole coefficient table.
inline std::string render_offdiag_table(int k, Format format) {
  const auto table = build_table(k);
  if (format == Format::json) {
    auto doc = to_json(table);
    doc["target"] = "offdiag_table";
    return doc.dump(2);
  }
  const bool latex = format == Format::latex;
  detail::Grid grid{{detail::math("k=" + std::to_string(k), latex)}};
  for (int j = 0; j < k; ++j) grid[0].push_back(detail::math("j=" + std::to_string(j), latex));
  for (int i = 0; i + 1 < k; ++i) {
    std::vector<std::string> row{detail::math("i=" + std::to_string(i), latex)};
    for (int j = 0; j < k; ++j) row.push_back(j > i ? detail::math(std::to_string(table.at(i, j)), latex) : "");
    grid.push_back(std::move(row));
  }
  return detail::render_grid(grid, format);
}

/// The whole triangle N_{i,j}, 0 <= i <= j <= k-1, with D_k and the constant.
inline std::string render_coefficients(int k, Format format) {
  const auto table = build_table(k);
  if (format == Format::json) return to_json(table).dump(2);
  const bool latex = format == Format::latex;
  detail::Grid grid{{detail::math("k=" + std::to_string(k), latex)}};
  for (int j = 0; j < k; ++j) grid[0].push_back(detail::math("j=" + std::to_string(j), latex));
  for (int i = 0; i < k; ++i) {
    std::vector<std::string> row{detail::math("i=" + std::to_string(i), latex)};
    for (int j = 0; j < k; ++j) row.push_back(j >= i ? detail::math(std::to_string(table.at(i, j)), latex) : "");
    grid.push_back(std::move(row));
  }
  std::string out = detail::render_grid(grid, format);
  const std::string d = std::to_string(table.denominator());
  const std::string c = std::to_string(table.cleared_constant());
  if (latex) return out + "$D_{" + std::to_string(k) + "} = " + d + "$, constant $" + c + "$\n";
  return out + "D_k = " + d + "\nconstant = " + c + "\n";
}

inline std::string render_ledger(const ContributionLedger& ledger, bool evaluated, Format format) {
  if (format == Format::json) {
    auto doc = to_json(ledger);
    doc["target"] = evaluated ? "ledger_evaluated" : "ledger_symbolic";
    return doc.dump(2);
  }
  const bool latex = format == Format::latex;
  detail::Grid grid{{""}};
  for (Summand u : kSummands) grid[0].push_back("Summand-" + to_string(u));
  if (evaluated) grid[0].push_back("Sum");
  for (IndexSet s : kIndexSets) {
    std::vector<std::string> row{to_string(s)};
    for (Summand u : kSummands) {
      const auto& c = ledger.cell(s, u);
      if (!c) {
        row.emplace_back();
      } else if (evaluated) {
        row.push_back(latex ? detail::math(detail::poly_latex(c->value), true) : c->value.to_string());
      } else {
        row.push_back(detail::math(c->label(), latex));
      }
    }
    if (evaluated) {
      const Poly& sum = ledger.row_sum(s);
      row.push_back(latex ? detail::math(detail::poly_latex(sum), true) : sum.to_string());
    }
    grid.push_back(std::move(row));
  }
  return detail::render_grid(grid, format);
}

inline std::string render_table(const RenderRequest& request) {
  switch (request.target) {
    case RenderTarget::identity: return render_identity(request.k, request.format);
    case RenderTarget::diag_table: return render_diag_table(request.k, request.format);
    case RenderTarget::offdiag_table: return render_offdiag_table(request.k, request.format);
    case RenderTarget::ledger_symbolic: return render_ledger(build_ledger(), false, request.format);
    case RenderTarget::ledger_evaluated: return render_ledger(build_ledger(), true, request.format);
  }
  throw DomainError("unsupported render target");
}

}  // namespace kbonacci
