#pragma once

// Reference values transcribed from the published worked identities for
// k = 2..6 and their coefficient tables. Tests compare the library against
// these literals; nothing here is computed.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kbonacci/poly.hpp"

namespace kbonacci::reference {

struct WorkedIdentity {
  int k;
  std::int64_t denominator;
  std::map<std::pair<int, int>, std::int64_t> terms;  ///< nonzero N_{i,j} as displayed
  std::int64_t constant;                              ///< constant inside the parentheses
};

inline const std::vector<WorkedIdentity>& worked_identities() {
  static const std::vector<WorkedIdentity> ids = {
      {2, 2, {{{0, 1}, 2}}, 0},
      {3, 4, {{{0, 0}, -1}, {{1, 1}, -4}, {{2, 2}, -1}, {{0, 2}, 2}, {{1, 2}, 4}}, 1},
      {4,
       6,
       {{{0, 0}, -2}, {{1, 1}, -8}, {{2, 2}, -6}, {{3, 3}, -2}, {{0, 1}, -2}, {{0, 3}, 2}, {{1, 3}, 4}, {{2, 3}, 6}},
       2},
      {5,
       8,
       {{{0, 0}, -3},
        {{1, 1}, -12},
        {{2, 2}, -11},
        {{3, 3}, -8},
        {{4, 4}, -3},
        {{0, 1}, -4},
        {{0, 2}, -2},
        {{0, 4}, 2},
        {{1, 2}, -4},
        {{1, 4}, 4},
        {{2, 4}, 6},
        {{3, 4}, 8}},
       3},
      {6,
       10,
       {{{0, 0}, -4},  {{1, 1}, -16}, {{2, 2}, -16}, {{3, 3}, -14}, {{4, 4}, -10}, {{5, 5}, -4},
        {{0, 1}, -6},  {{0, 2}, -4},  {{0, 3}, -2},  {{0, 5}, 2},   {{1, 2}, -8},  {{1, 3}, -4},
        {{1, 5}, 4},   {{2, 3}, -6},  {{2, 5}, 6},   {{3, 5}, 8},   {{4, 5}, 10}},
       4},
  };
  return ids;
}

/// Diagonal coefficients N_{i,i}, rows k = 2..6.
inline const std::map<int, std::vector<std::int64_t>>& diagonal_table() {
  static const std::map<int, std::vector<std::int64_t>> rows = {
      {2, {0, 0}},
      {3, {-1, -4, -1}},
      {4, {-2, -8, -6, -2}},
      {5, {-3, -12, -11, -8, -3}},
      {6, {-4, -16, -16, -14, -10, -4}},
  };
  return rows;
}

/// Off-diagonal coefficients N_{i,j}, i < j, for k = 6.
inline const std::map<std::pair<int, int>, std::int64_t>& offdiag_table_k6() {
  static const std::map<std::pair<int, int>, std::int64_t> cells = {
      {{0, 1}, -6}, {{0, 2}, -4}, {{0, 3}, -2}, {{0, 4}, 0}, {{0, 5}, 2}, {{1, 2}, -8}, {{1, 3}, -4}, {{1, 4}, 0},
      {{1, 5}, 4},  {{2, 3}, -6}, {{2, 4}, 0},  {{2, 5}, 6}, {{3, 4}, 0}, {{3, 5}, 8}, {{4, 5}, 10},
  };
  return cells;
}

/// Evaluated ledger: rows A..G, columns Summand-I..V, then the row sum.
/// Blank cells are nullopt.
struct EvaluatedRow {
  char set;
  std::vector<std::optional<Poly>> summands;  // five entries
  Poly sum;
};

inline std::vector<EvaluatedRow> evaluated_ledger() {
  using namespace poly_vars;
  const std::optional<Poly> blank;
  return {
      {'A', {blank, blank, 2 - k, k - 2, blank}, 0},
      {'B', {2 - k, 2, 2 - k, 4 * (k - 1) - 4, blank}, 2 * k - 2},
      {'C', {4 - (i + 3) * (k - i), 2 * (i + 1), 2 - k, (i + 4) * (k - i - 1) - 4, blank}, 0},
      {'D', {blank, 2 * (j + 1), 4 - 2 * k, blank, -2 * (j - (k - 3))}, 0},
      {'E', {blank, 2 * (k - 1), 4 - 2 * k, blank, Poly(-2)}, 0},
      {'F', {2 * (i + 1) * (j - (k - 2)), 2 * (i + 1) + 2 * (j + 1), 4 - 2 * k, blank, -2 * (i + 2) * (j - (k - 3))}, 0},
      {'G', {Poly(0), 2 * (i + 1) + 2 * (k - 1), 4 - 2 * k, blank, -2 * (i + 2)}, 0},
  };
}

/// Symbolic ledger labels as displayed, "" for blank.
inline const std::vector<std::vector<std::string>>& symbolic_ledger() {
  static const std::vector<std::vector<std::string>> rows = {
      {"", "", "N_{k-1,k-1}", "-N_{0,0}", ""},
      {"N_{0,0}", "N_{0,k-1}", "N_{k-1,k-1}", "-N_{1,1}", ""},
      {"N_{i,i}", "N_{i,k-1}", "N_{k-1,k-1}", "-N_{i+1,i+1}", ""},
      {"", "N_{j,k-1}", "2N_{k-1,k-1}", "", "-N_{0,j+1}"},
      {"", "N_{k-2,k-1}", "2N_{k-1,k-1}", "", "-N_{0,k-1}"},
      {"N_{i,j}", "N_{i,k-1} + N_{j,k-1}", "2N_{k-1,k-1}", "", "-N_{i+1,j+1}"},
      {"N_{i,k-2}", "N_{i,k-1} + N_{k-2,k-1}", "2N_{k-1,k-1}", "", "-N_{i+1,k-1}"},
  };
  return rows;
}

}  // namespace kbonacci::reference
