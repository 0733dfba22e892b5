#pragma once

/**
 * @file symbolic.hpp
 * @brief Mechanized coefficient bookkeeping for the telescoped identity.
 *
 * After telescoping and replacing G_{m+k-1} by G_{m-1} + G_m + ... + G_{m+k-2},
 * both sides are quadratic forms in G_{m+i}, -1 <= i <= k-2. The coefficient
 * N'_{i,j} of G_{m+i} G_{m+j} must be D_k at (0,0) and zero elsewhere.
 *
 * The cell triangle {-1 <= i <= j <= k-2} splits into seven index sets on
 * which N'_{i,j} has a single polynomial form:
 *
 *   A = {i=-1, j=-1}                 E = {i=-1, j=k-2}
 *   B = {i=0,  j=0}                  F = {0 <= i <= k-4, i+1 <= j <= k-3}
 *   C = {1 <= i <= k-2, j=i}         G = {0 <= i <= k-3, j=k-2}
 *   D = {i=-1, 0 <= j <= k-3}
 *
 * and the middle expression splits into five summands:
 *
 *   I   = sum_{0<=i<=j<=k-2} N_{i,j} G_{m+i} G_{m+j}
 *   II  = sum_{0<=i<=k-2} N_{i,k-1} G_{m+i} (sum_{t=-1}^{k-2} G_{m+t})
 *   III = N_{k-1,k-1} (sum_{t=-1}^{k-2} G_{m+t})^2
 *   IV  = -sum_{-1<=i<=k-2} N_{i+1,i+1} G_{m+i}^2
 *   V   = -sum_{-1<=i<j<=k-2} N_{i+1,j+1} G_{m+i} G_{m+j}
 *
 * The ContributionLedger holds the 7x5 grid of symbolic contributions.
 * verify_parametric sums each row as a polynomial in (i, j, k);
 * verify_concrete compares those row sums against expand_concrete, a direct
 * expansion of the middle expression for a fixed k that never looks at the
 * seven sets.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kbonacci/coefficients.hpp"
#include "kbonacci/error.hpp"
#include "kbonacci/identity.hpp"
#include "kbonacci/poly.hpp"

namespace kbonacci {

enum class IndexSet : std::size_t { A = 0, B, C, D, E, F, G };
enum class Summand : std::size_t { I = 0, II, III, IV, V };

inline constexpr std::array<IndexSet, 7> kIndexSets = {IndexSet::A, IndexSet::B, IndexSet::C, IndexSet::D,
                                                       IndexSet::E, IndexSet::F, IndexSet::G};
inline constexpr std::array<Summand, 5> kSummands = {Summand::I, Summand::II, Summand::III, Summand::IV,
                                                     Summand::V};

inline std::string to_string(IndexSet s) { return std::string(1, static_cast<char>('A' + static_cast<int>(s))); }

inline std::string to_string(Summand s) {
  static const std::array<const char*, 5> names = {"I", "II", "III", "IV", "V"};
  return names[static_cast<std::size_t>(s)];
}

inline std::optional<IndexSet> index_set_from_string(const std::string& name) {
  if (name.size() == 1 && name[0] >= 'A' && name[0] <= 'G') return static_cast<IndexSet>(name[0] - 'A');
  return std::nullopt;
}

inline std::optional<Summand> summand_from_string(const std::string& name) {
  for (Summand s : kSummands) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Index sets

struct Cell {
  int i;
  int j;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline bool in_triangle(int i, int j, int k) { return -1 <= i && i <= j && j <= k - 2; }

/// Membership predicate, transcribed set by set from the definitions above.
inline bool contains(IndexSet s, int i, int j, int k) {
  switch (s) {
    case IndexSet::A: return i == -1 && j == -1;
    case IndexSet::B: return i == 0 && j == 0;
    case IndexSet::C: return 1 <= i && i <= k - 2 && j == i;
    case IndexSet::D: return i == -1 && 0 <= j && j <= k - 3;
    case IndexSet::E: return i == -1 && j == k - 2;
    case IndexSet::F: return 0 <= i && i <= k - 4 && i + 1 <= j && j <= k - 3;
    case IndexSet::G: return 0 <= i && i <= k - 3 && j == k - 2;
  }
  return false;
}

/// The set holding cell (i, j). Decided by a decision tree, not by the
/// predicates, so that the two can be checked against each other.
inline IndexSet classify(int i, int j, int k) {
  require_order(k);
  if (!in_triangle(i, j, k)) {
    throw DomainError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside -1 <= i <= j <= " +
                      std::to_string(k - 2));
  }
  if (i == -1) {
    if (j == -1) return IndexSet::A;
    return j == k - 2 ? IndexSet::E : IndexSet::D;
  }
  if (i == j) return i == 0 ? IndexSet::B : IndexSet::C;
  return j == k - 2 ? IndexSet::G : IndexSet::F;
}

/// Every cell of the triangle, row-major.
inline std::vector<Cell> triangle_cells(int k) {
  std::vector<Cell> cells;
  for (int i = -1; i <= k - 2; ++i) {
    for (int j = i; j <= k - 2; ++j) cells.push_back({i, j});
  }
  return cells;
}

inline std::vector<Cell> members(IndexSet s, int k) {
  std::vector<Cell> cells;
  for (const Cell& c : triangle_cells(k)) {
    if (contains(s, c.i, c.j, k)) cells.push_back(c);
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Ledger

/// One symbolic term multiplier * N_{row,col} inside a ledger cell, with the
/// branch of the piecewise definition that applies on the whole index set.
struct CoefficientRef {
  int multiplier = 1;
  Branch branch = Branch::off_diagonal;
  Poly row;
  Poly col;
  std::string row_label;
  std::string col_label;

  Poly expand(const CoefficientFormulas& f) const {
    return multiplier * f.branch(branch).substitute({{Var::i, row}, {Var::j, col}});
  }

  std::string label() const {
    std::string out;
    if (multiplier == -1) out = "-";
    else if (multiplier != 1) out = std::to_string(multiplier);
    return out + "N_{" + row_label + "," + col_label + "}";
  }

  friend bool operator==(const CoefficientRef&, const CoefficientRef&) = default;
};

struct LedgerCell {
  std::vector<CoefficientRef> refs;
  Poly value;

  std::string label() const {
    std::string out;
    for (std::size_t n = 0; n < refs.size(); ++n) out += (n == 0 ? "" : " + ") + refs[n].label();
    return out;
  }

  friend bool operator==(const LedgerCell&, const LedgerCell&) = default;
};

class ContributionLedger {
 public:
  using Row = std::array<std::optional<LedgerCell>, 5>;

  const std::optional<LedgerCell>& cell(IndexSet s, Summand u) const {
    return grid_[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)];
  }

  const Poly& row_sum(IndexSet s) const { return row_sums_[static_cast<std::size_t>(s)]; }

  std::size_t populated() const {
    std::size_t n = 0;
    for (const auto& row : grid_) {
      for (const auto& c : row) n += c.has_value();
    }
    return n;
  }

  void set(IndexSet s, Summand u, LedgerCell c) {
    grid_[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)] = std::move(c);
    recompute(s);
  }

  /// Blanks a cell; used to confirm the verifiers notice a missing contribution.
  void drop(IndexSet s, Summand u) {
    grid_[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)].reset();
    recompute(s);
  }

  friend bool operator==(const ContributionLedger&, const ContributionLedger&) = default;

 private:
  void recompute(IndexSet s) {
    Poly sum;
    for (const auto& c : grid_[static_cast<std::size_t>(s)]) {
      if (c) sum += c->value;
    }
    row_sums_[static_cast<std::size_t>(s)] = std::move(sum);
  }

  std::array<Row, 7> grid_{};
  std::array<Poly, 7> row_sums_{};
};

namespace detail {

struct IndexExpr {
  Poly poly;
  std::string label;
};

inline IndexExpr idx(Poly p, std::string label) { return {std::move(p), std::move(label)}; }

inline CoefficientRef ref(int multiplier, Branch branch, const IndexExpr& row, const IndexExpr& col) {
  return {multiplier, branch, row.poly, col.poly, row.label, col.label};
}

}  // namespace detail

/// Builds the 7x5 grid. Each N-reference is tagged with the branch valid on
/// the whole index set, e.g. N_{i,k-1} is always off-diagonal since i <= k-2.
inline ContributionLedger build_ledger(const CoefficientFormulas& f = CoefficientFormulas::standard()) {
  using namespace poly_vars;
  using detail::idx;
  using detail::ref;
  const auto I = idx(i, "i");
  const auto J = idx(j, "j");
  const auto zero = idx(0, "0");
  const auto one = idx(1, "1");
  const auto km1 = idx(k - 1, "k-1");
  const auto km2 = idx(k - 2, "k-2");
  const auto ip1 = idx(i + 1, "i+1");
  const auto jp1 = idx(j + 1, "j+1");

  const auto last_diag = [&](int mult) { return ref(mult, Branch::diagonal, km1, km1); };
  const Branch off = Branch::off_diagonal;

  const std::vector<std::tuple<IndexSet, Summand, std::vector<CoefficientRef>>> layout = {
      {IndexSet::A, Summand::III, {last_diag(1)}},
      {IndexSet::A, Summand::IV, {ref(-1, Branch::origin, zero, zero)}},

      {IndexSet::B, Summand::I, {ref(1, Branch::origin, zero, zero)}},
      {IndexSet::B, Summand::II, {ref(1, off, zero, km1)}},
      {IndexSet::B, Summand::III, {last_diag(1)}},
      {IndexSet::B, Summand::IV, {ref(-1, Branch::diagonal, one, one)}},

      {IndexSet::C, Summand::I, {ref(1, Branch::diagonal, I, I)}},
      {IndexSet::C, Summand::II, {ref(1, off, I, km1)}},
      {IndexSet::C, Summand::III, {last_diag(1)}},
      {IndexSet::C, Summand::IV, {ref(-1, Branch::diagonal, ip1, ip1)}},

      {IndexSet::D, Summand::II, {ref(1, off, J, km1)}},
      {IndexSet::D, Summand::III, {last_diag(2)}},
      {IndexSet::D, Summand::V, {ref(-1, off, zero, jp1)}},

      {IndexSet::E, Summand::II, {ref(1, off, km2, km1)}},
      {IndexSet::E, Summand::III, {last_diag(2)}},
      {IndexSet::E, Summand::V, {ref(-1, off, zero, km1)}},

      {IndexSet::F, Summand::I, {ref(1, off, I, J)}},
      {IndexSet::F, Summand::II, {ref(1, off, I, km1), ref(1, off, J, km1)}},
      {IndexSet::F, Summand::III, {last_diag(2)}},
      {IndexSet::F, Summand::V, {ref(-1, off, ip1, jp1)}},

      {IndexSet::G, Summand::I, {ref(1, off, I, km2)}},
      {IndexSet::G, Summand::II, {ref(1, off, I, km1), ref(1, off, km2, km1)}},
      {IndexSet::G, Summand::III, {last_diag(2)}},
      {IndexSet::G, Summand::V, {ref(-1, off, ip1, km1)}},
  };

  ContributionLedger ledger;
  for (const auto& [set, summand, refs] : layout) {
    LedgerCell c{refs, {}};
    for (const auto& r : refs) c.value += r.expand(f);
    ledger.set(set, summand, std::move(c));
  }
  return ledger;
}

// ---------------------------------------------------------------------------
// Proof reports

struct RowCheck {
  IndexSet set;
  Poly computed;
  Poly expected;

  bool ok() const { return computed == expected; }
};

struct ParametricReport {
  std::vector<RowCheck> rows;

  bool passed() const {
    for (const auto& r : rows) {
      if (!r.ok()) return false;
    }
    return true;
  }

  std::vector<IndexSet> failed_rows() const {
    std::vector<IndexSet> out;
    for (const auto& r : rows) {
      if (!r.ok()) out.push_back(r.set);
    }
    return out;
  }
};

/// Row B must sum to D_k, every other row to the zero polynomial.
inline ParametricReport verify_parametric(const ContributionLedger& ledger,
                                          const CoefficientFormulas& f = CoefficientFormulas::standard()) {
  ParametricReport report;
  for (IndexSet s : kIndexSets) {
    report.rows.push_back({s, ledger.row_sum(s), s == IndexSet::B ? f.denominator : Poly{}});
  }
  return report;
}

/// Unordered-pair-keyed quadratic form over G_{m+i}, -1 <= i <= k-2.
using QuadraticForm = std::map<Cell, BigInt>;

/// Expands
///   sum_{0<=i<=j<=k-1} N_{i,j} G_{m+i} G_{m+j} - sum_{-1<=i<=j<=k-2} N_{i+1,j+1} G_{m+i} G_{m+j}
/// for one k, rewriting G_{m+k-1} as the sum of the k preceding terms and
/// multiplying out. Off-diagonal products of that sum with itself land twice
/// on the same unordered cell.
inline QuadraticForm expand_concrete(int k, const CoefficientFormulas& f = CoefficientFormulas::standard()) {
  require_order(k);
  const CoefficientTable table = build_table(k, f);
  QuadraticForm form;
  for (const Cell& c : triangle_cells(k)) form[c] = 0;

  // G_{m+i} as a linear combination of G_{m-1} .. G_{m+k-2}.
  const auto linear = [k](int i) {
    std::vector<std::pair<int, int>> terms;
    if (i <= k - 2) {
      terms.emplace_back(i, 1);
    } else {
      for (int t = -1; t <= k - 2; ++t) terms.emplace_back(t, 1);
    }
    return terms;
  };

  table.for_each([&](int i, int j, std::int64_t n) {
    for (const auto& [a, ca] : linear(i)) {
      for (const auto& [b, cb] : linear(j)) {
        form[{std::min(a, b), std::max(a, b)}] += BigInt(n) * ca * cb;
      }
    }
  });
  for (const Cell& c : triangle_cells(k)) form[c] -= table.at(c.i + 1, c.j + 1);
  return form;
}

struct CellMismatch {
  int k;
  int i;
  int j;
  IndexSet set;
  BigInt ledger;  ///< row sum of the cell's set evaluated at (i, j, k)
  BigInt oracle;  ///< coefficient from expand_concrete
};

struct ConclusionMismatch {
  int k;
  int i;
  int j;
  BigInt value;
  BigInt expected;
};

struct ConcreteReport {
  IntRange k_range;
  std::vector<CellMismatch> mismatches;
  std::vector<ConclusionMismatch> conclusion_failures;
  std::size_t cells_checked = 0;

  bool passed() const { return mismatches.empty() && conclusion_failures.empty(); }
};

inline ConcreteReport verify_concrete(IntRange k_range, const ContributionLedger& ledger,
                                      const CoefficientFormulas& f = CoefficientFormulas::standard()) {
  if (k_range.empty()) throw DomainError("empty k range");
  require_order(k_range.lo);
  ConcreteReport report{k_range, {}, {}, 0};
  for (int k = k_range.lo; k <= k_range.hi; ++k) {
    const QuadraticForm oracle = expand_concrete(k, f);
    const BigInt denominator = d_k(k, f);
    for (const auto& [cell, value] : oracle) {
      const IndexSet s = classify(cell.i, cell.j, k);
      BigInt from_ledger = ledger.row_sum(s).evaluate({cell.i, cell.j, k});
      ++report.cells_checked;
      if (from_ledger != value) report.mismatches.push_back({k, cell.i, cell.j, s, from_ledger, value});
      BigInt expected = (cell.i == 0 && cell.j == 0) ? denominator : BigInt(0);
      if (value != expected) report.conclusion_failures.push_back({k, cell.i, cell.j, value, expected});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json coefficient;
    if (c >= BigInt(INT64_MIN) && c <= BigInt(INT64_MAX)) coefficient = static_cast<std::int64_t>(c);
    else coefficient = to_decimal(c);
    terms.push_back({{"ei", e[0]}, {"ej", e[1]}, {"ek", e[2]}, {"c", coefficient}});
  }
  return terms;
}

inline Poly poly_from_json(const nlohmann::json& terms) {
  Poly p;
  for (const auto& t : terms) {
    BigInt c;
    if (t.at("c").is_string()) {
      if (!parse_decimal(t.at("c").get<std::string>(), c)) throw FormatError("bad polynomial coefficient");
    } else {
      c = t.at("c").get<std::int64_t>();
    }
    p += Poly::monomial({t.at("ei").get<unsigned>(), t.at("ej").get<unsigned>(), t.at("ek").get<unsigned>()}, c);
  }
  return p;
}

inline std::string to_string(Branch b) {
  switch (b) {
    case Branch::origin: return "origin";
    case Branch::diagonal: return "diagonal";
    case Branch::off_diagonal: return "off_diagonal";
  }
  return "?";
}

inline Branch branch_from_string(const std::string& name) {
  if (name == "origin") return Branch::origin;
  if (name == "diagonal") return Branch::diagonal;
  if (name == "off_diagonal") return Branch::off_diagonal;
  throw FormatError("unknown branch \"" + name + "\"");
}

inline nlohmann::json to_json(const ContributionLedger& ledger) {
  nlohmann::json rows = nlohmann::json::array();
  for (IndexSet s : kIndexSets) {
    nlohmann::json cells = nlohmann::json::array();
    for (Summand u : kSummands) {
      const auto& c = ledger.cell(s, u);
      if (!c) continue;
      nlohmann::json refs = nlohmann::json::array();
      for (const auto& r : c->refs) {
        refs.push_back({{"multiplier", r.multiplier},
                        {"branch", to_string(r.branch)},
                        {"row", r.row_label},
                        {"col", r.col_label},
                        {"row_poly", to_json(r.row)},
                        {"col_poly", to_json(r.col)}});
      }
      cells.push_back({{"summand", to_string(u)},
                       {"label", c->label()},
                       {"refs", std::move(refs)},
                       {"poly", to_json(c->value)},
                       {"text", c->value.to_string()}});
    }
    rows.push_back({{"set", to_string(s)},
                    {"cells", std::move(cells)},
                    {"sum", to_json(ledger.row_sum(s))},
                    {"sum_text", ledger.row_sum(s).to_string()}});
  }
  return {{"rows", std::move(rows)}};
}

inline ContributionLedger ledger_from_json(const nlohmann::json& doc) {
  ContributionLedger ledger;
  for (const auto& row : doc.at("rows")) {
    auto set = index_set_from_string(row.at("set").get<std::string>());
    if (!set) throw FormatError("unknown index set " + row.at("set").dump());
    for (const auto& c : row.at("cells")) {
      auto summand = summand_from_string(c.at("summand").get<std::string>());
      if (!summand) throw FormatError("unknown summand " + c.at("summand").dump());
      LedgerCell cell;
      for (const auto& r : c.at("refs")) {
        cell.refs.push_back({r.at("multiplier").get<int>(), branch_from_string(r.at("branch").get<std::string>()),
                             poly_from_json(r.at("row_poly")), poly_from_json(r.at("col_poly")),
                             r.at("row").get<std::string>(), r.at("col").get<std::string>()});
      }
      cell.value = poly_from_json(c.at("poly"));
      ledger.set(*set, *summand, std::move(cell));
    }
  }
  return ledger;
}

inline nlohmann::json to_json(const ParametricReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"set", to_string(r.set)},
                    {"poly", to_json(r.computed)},
                    {"text", r.computed.to_string()},
                    {"expected", r.expected.to_string()},
                    {"status", r.ok() ? "pass" : "fail"}});
  }
  return {{"mode", "parametric"}, {"status", report.passed() ? "pass" : "fail"}, {"rows", std::move(rows)}};
}

inline nlohmann::json to_json(const ConcreteReport& report) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"k", m.k},
                          {"i", m.i},
                          {"j", m.j},
                          {"set", to_string(m.set)},
                          {"ledger", to_decimal(m.ledger)},
                          {"oracle", to_decimal(m.oracle)}});
  }
  nlohmann::json conclusion = nlohmann::json::array();
  for (const auto& m : report.conclusion_failures) {
    conclusion.push_back(
        {{"k", m.k}, {"i", m.i}, {"j", m.j}, {"value", to_decimal(m.value)}, {"expected", to_decimal(m.expected)}});
  }
  return {{"mode", "concrete"},
          {"k_range", {report.k_range.lo, report.k_range.hi}},
          {"cells_checked", report.cells_checked},
          {"status", report.passed() ? "pass" : "fail"},
          {"mismatches", std::move(mismatches)},
          {"conclusion_failures", std::move(conclusion)}};
}

}  // namespace kbonacci
