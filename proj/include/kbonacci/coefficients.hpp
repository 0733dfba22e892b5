#pragma once

/**
 * @file coefficients.hpp
 * @brief Closed-form coefficients of the sum-of-squares identity
 *
 *   D_k * sum_{n=0}^{m} G_n^2 = sum_{0<=i<=j<=k-1} N_{i,j} G_{m+i} G_{m+j} - N_{k-1,k-1}
 *
 * with
 *   D_k     = 2(k-1)
 *   N_{0,0} = -(k-2)
 *   N_{i,i} = 4 - (i+3)(k-i)          1 <= i <= k-1
 *   N_{i,j} = 2(i+1)(j-(k-2))         0 <= i < j <= k-1
 *
 * The formulas are kept as polynomials in (i, j, k) so the numeric tables and
 * the symbolic ledger are driven by one definition. Tests swap in perturbed
 * formula sets to confirm the verifiers notice.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kbonacci/error.hpp"
#include "kbonacci/poly.hpp"

namespace kbonacci {

/// Which piece of the piecewise definition of N_{i,j} applies.
enum class Branch { origin, diagonal, off_diagonal };

struct CoefficientFormulas {
  Poly denominator;   ///< D_k, in k
  Poly origin;        ///< N_{0,0}, in k
  Poly diagonal;      ///< N_{i,i} for i >= 1, in i and k
  Poly off_diagonal;  ///< N_{i,j} for i < j, in i, j and k

  const Poly& branch(Branch b) const {
    switch (b) {
      case Branch::origin: return origin;
      case Branch::diagonal: return diagonal;
      case Branch::off_diagonal: return off_diagonal;
    }
    return origin;
  }

  static CoefficientFormulas standard() {
    using namespace poly_vars;
    return {2 * (k - 1), -(k - 2), 4 - (i + 3) * (k - i), 2 * (i + 1) * (j - (k - 2))};
  }
};

inline void require_order(int k) {
  if (k < 2) throw DomainError("order k must be at least 2, got " + std::to_string(k));
}

inline std::int64_t to_int64(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) throw DomainError("coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

inline std::int64_t d_k(int k, const CoefficientFormulas& f = CoefficientFormulas::standard()) {
  require_order(k);
  return to_int64(f.denominator.evaluate({0, 0, k}));
}

inline Branch branch_of(int i, int j) {
  if (i == j) return i == 0 ? Branch::origin : Branch::diagonal;
  return Branch::off_diagonal;
}

inline std::int64_t n_coeff(int i, int j, int k, const CoefficientFormulas& f = CoefficientFormulas::standard()) {
  require_order(k);
  if (i > j) {
    throw OrderingError("N_{" + std::to_string(i) + "," + std::to_string(j) + "} requested with i > j");
  }
  if (i < 0 || j > k - 1) {
    throw DomainError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside 0 <= i <= j <= " +
                      std::to_string(k - 1));
  }
  return to_int64(f.branch(branch_of(i, j)).evaluate({i, j, k}));
}

/// The upper-triangular coefficient table for one order k.
class CoefficientTable {
 public:
  CoefficientTable(int k, std::int64_t denominator, std::vector<std::int64_t> entries)
      : k_(k), denominator_(denominator), entries_(std::move(entries)) {
    require_order(k_);
    if (entries_.size() != cell_count(k_)) {
      throw DomainError("table for k=" + std::to_string(k_) + " needs " + std::to_string(cell_count(k_)) +
                        " cells, got " + std::to_string(entries_.size()));
    }
  }

  static std::size_t cell_count(int k) {
    auto n = static_cast<std::size_t>(k);
    return n * (n + 1) / 2;
  }

  int k() const noexcept { return k_; }
  std::int64_t denominator() const noexcept { return denominator_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Constant inside the cleared identity, -N_{k-1,k-1}.
  std::int64_t cleared_constant() const { return -at(k_ - 1, k_ - 1); }

  std::int64_t at(int i, int j) const { return entries_[slot(i, j)]; }

  /// Overwrites one cell; used to build deliberately broken tables.
  void set(int i, int j, std::int64_t value) { entries_[slot(i, j)] = value; }

  void set_denominator(std::int64_t value) { denominator_ = value; }

  /// Visits cells row-major: (0,0), (0,1), ..., (0,k-1), (1,1), ...
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int i = 0; i < k_; ++i) {
      for (int j = i; j < k_; ++j) fn(i, j, at(i, j));
    }
  }

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

 private:
  std::size_t slot(int i, int j) const {
    if (i > j) {
      throw OrderingError("N_{" + std::to_string(i) + "," + std::to_string(j) + "} requested with i > j");
    }
    if (i < 0 || j >= k_) {
      throw DomainError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside table of order " +
                        std::to_string(k_));
    }
    // Rows 0..i-1 hold k, k-1, ..., k-i+1 cells.
    auto row = static_cast<std::size_t>(i);
    auto n = static_cast<std::size_t>(k_);
    return row * n - row * (row - 1) / 2 + static_cast<std::size_t>(j - i);
  }

  int k_;
  std::int64_t denominator_;
  std::vector<std::int64_t> entries_;
};

inline CoefficientTable build_table(int k, const CoefficientFormulas& f = CoefficientFormulas::standard()) {
  require_order(k);
  std::vector<std::int64_t> entries;
  entries.reserve(CoefficientTable::cell_count(k));
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) entries.push_back(n_coeff(i, j, k, f));
  }
  return CoefficientTable(k, d_k(k, f), std::move(entries));
}

}  // namespace kbonacci
