#pragma once

/**
 * @file identity.hpp
 * @brief Exact numeric checks of the sum-of-squares identity in cleared form
 *
 *   D_k * sum_{n<=m} G_n^2  ==  sum_{i<=j} N_{i,j} G_{m+i} G_{m+j} - N_{k-1,k-1}
 *
 * and of its telescoped form (difference of the identity at m and m-1)
 *
 *   D_k * G_m^2  ==  sum_{i<=j} N_{i,j} (G_{m+i} G_{m+j} - G_{m-1+i} G_{m-1+j}).
 *
 * Everything is integer arithmetic; there are no tolerances.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kbonacci/bigint.hpp"
#include "kbonacci/coefficients.hpp"
#include "kbonacci/error.hpp"
#include "kbonacci/sequences.hpp"

namespace kbonacci {

/// Inclusive integer range "lo..hi".
struct IntRange {
  int lo = 0;
  int hi = 0;

  bool empty() const noexcept { return hi < lo; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

inline void require_window(const Sequence& seq, std::size_t last) {
  if (seq.size() <= last) {
    throw CoverageError("sequence window has " + std::to_string(seq.size()) + " terms, need G_0..G_" +
                        std::to_string(last));
  }
}

inline void require_matching_order(const CoefficientTable& table, const Sequence& seq) {
  if (table.k() != seq.k()) {
    throw DomainError("table order " + std::to_string(table.k()) + " does not match sequence order " +
                      std::to_string(seq.k()));
  }
}

/// D_k * sum_{n=0}^{m} G_n^2.
inline BigInt lhs_cleared(const CoefficientTable& table, const Sequence& seq, std::size_t m) {
  require_window(seq, m);
  BigInt sum = 0;
  for (std::size_t n = 0; n <= m; ++n) sum += seq[n] * seq[n];
  return sum * table.denominator();
}

/// sum N_{i,j} G_{m+offset+i} G_{m+offset+j} over the table's cells.
inline BigInt quadratic_form(const CoefficientTable& table, const Sequence& seq, std::size_t base) {
  BigInt sum = 0;
  table.for_each([&](int i, int j, std::int64_t n) {
    if (n != 0) sum += seq[base + static_cast<std::size_t>(i)] * seq[base + static_cast<std::size_t>(j)] * n;
  });
  return sum;
}

/// sum_{i<=j} N_{i,j} G_{m+i} G_{m+j} - N_{k-1,k-1}.
inline BigInt rhs_cleared(const CoefficientTable& table, const Sequence& seq, std::size_t m) {
  require_matching_order(table, seq);
  require_window(seq, m + static_cast<std::size_t>(table.k()) - 1);
  return quadratic_form(table, seq, m) + table.cleared_constant();
}

struct NumericFailure {
  int k;
  std::size_t m;
  BigInt lhs;
  BigInt rhs;
};

struct VerificationReport {
  IntRange k_range;
  std::size_t m_max = 0;
  std::vector<NumericFailure> failures;
  std::size_t checks = 0;

  bool passed() const noexcept { return failures.empty(); }
};

using TableBuilder = std::function<CoefficientTable(int k)>;

/// Checks the cleared identity for every k in k_range and 0 <= m <= m_max.
/// The running sum of squares is carried across m, so each k costs O(m_max * k^2).
inline VerificationReport verify_numeric(IntRange k_range, std::size_t m_max,
                                         const TableBuilder& make_table = [](int k) { return build_table(k); }) {
  if (k_range.empty()) throw DomainError("empty k range");
  require_order(k_range.lo);
  VerificationReport report{k_range, m_max, {}, 0};
  for (int k = k_range.lo; k <= k_range.hi; ++k) {
    const CoefficientTable table = make_table(k);
    const Sequence seq = generate(RecurrenceSpec(k), m_max + static_cast<std::size_t>(k));
    BigInt squares = 0;
    for (std::size_t m = 0; m <= m_max; ++m) {
      squares += seq[m] * seq[m];
      BigInt lhs = squares * table.denominator();
      BigInt rhs = rhs_cleared(table, seq, m);
      ++report.checks;
      if (lhs != rhs) report.failures.push_back({k, m, std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

/// Checks the telescoped identity at a single m >= 1.
inline bool verify_telescoped(const CoefficientTable& table, const Sequence& seq, std::size_t m) {
  if (m == 0) throw DomainError("telescoped identity needs m >= 1 (G_{m-1} must exist)");
  require_matching_order(table, seq);
  require_window(seq, m + static_cast<std::size_t>(table.k()) - 1);
  BigInt lhs = seq[m] * seq[m] * table.denominator();
  BigInt rhs = quadratic_form(table, seq, m) - quadratic_form(table, seq, m - 1);
  return lhs == rhs;
}

/// The constant c(m) with  sum_{n<=m} G_n^2 = (sum N_{i,j} G_{m+i} G_{m+j} + c(m)) / D_k,
/// i.e. c(m) = D_k sum G_n^2 - sum N G G, measured at each probe m.
struct BaseConstantReport {
  int k = 0;
  std::int64_t denominator = 0;
  IntRange probes;
  std::vector<BigInt> numerators;  ///< c(m) for m = probes.lo .. probes.hi

  /// The constancy claim; false is a finding against the identity, not an error.
  bool constant() const {
    for (const auto& n : numerators) {
      if (n != numerators.front()) return false;
    }
    return true;
  }

  /// First probe m whose numerator differs from the one at probes.lo.
  std::optional<int> first_deviation() const {
    for (std::size_t n = 0; n < numerators.size(); ++n) {
      if (numerators[n] != numerators.front()) return probes.lo + static_cast<int>(n);
    }
    return std::nullopt;
  }

  const BigInt& numerator() const { return numerators.front(); }

  /// numerator() / D_k in lowest terms.
  Rational value() const { return Rational(numerator(), BigInt(denominator)); }
};

inline BaseConstantReport base_constant(const RecurrenceSpec& spec, IntRange probes,
                                        const CoefficientFormulas& f = CoefficientFormulas::standard()) {
  if (probes.empty() || probes.lo < 0) throw DomainError("probe range must be a nonempty range of m >= 0");
  const CoefficientTable table = build_table(spec.k(), f);
  const Sequence seq = generate(spec, static_cast<std::size_t>(probes.hi + spec.k()));
  BaseConstantReport report{spec.k(), table.denominator(), probes, {}};
  BigInt squares = 0;
  for (int m = 0; m <= probes.hi; ++m) {
    const auto at = static_cast<std::size_t>(m);
    squares += seq[at] * seq[at];
    if (m >= probes.lo) report.numerators.push_back(squares * table.denominator() - quadratic_form(table, seq, at));
  }
  return report;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"k", f.k}, {"m", f.m}, {"lhs", to_decimal(f.lhs)}, {"rhs", to_decimal(f.rhs)}});
  }
  return {{"k_range", {report.k_range.lo, report.k_range.hi}},
          {"m_max", report.m_max},
          {"status", report.passed() ? "pass" : "fail"},
          {"failures", std::move(failures)}};
}

inline nlohmann::json to_json(const BaseConstantReport& report) {
  nlohmann::json probes = nlohmann::json::array();
  for (std::size_t n = 0; n < report.numerators.size(); ++n) {
    probes.push_back({{"m", report.probes.lo + static_cast<int>(n)}, {"numerator", to_decimal(report.numerators[n])}});
  }
  const Rational value = report.value();
  nlohmann::json out = {{"k", report.k},
                        {"denominator", report.denominator},
                        {"probes", {report.probes.lo, report.probes.hi}},
                        {"numerator", to_decimal(report.numerator())},
                        {"value", {{"num", to_decimal(boost::multiprecision::numerator(value))}, {"den", to_decimal(boost::multiprecision::denominator(value))}}},
                        {"status", report.constant() ? "constant" : "non-constant"},
                        {"samples", std::move(probes)}};
  if (auto m = report.first_deviation()) out["first_deviation"] = *m;
  return out;
}

}  // namespace kbonacci
