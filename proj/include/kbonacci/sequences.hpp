#pragma once

/**
 * @file sequences.hpp
 * @brief k-bonacci sequence generation and OEIS b-file ingestion.
 *
 *   G(n) = G(n-1) + G(n-2) + ... + G(n-k),   n >= k
 *
 * with default initial window 0, ..., 0, 1 (k-1 zeros then a one), which is
 * the OEIS convention: k=2 A000045, k=3 A000073, k=4 A000078, k=5 A001591.
 * Terms are arbitrary precision; they grow like phi_k^n.
 */

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kbonacci/bigint.hpp"
#include "kbonacci/error.hpp"

namespace kbonacci {

class RecurrenceSpec {
 public:
  /// Order k with the standard initial window.
  explicit RecurrenceSpec(int k) : RecurrenceSpec(k, default_initial(k)) {}

  RecurrenceSpec(int k, std::vector<BigInt> initial) : k_(k), initial_(std::move(initial)) {
    if (k_ < 2) throw DomainError("recurrence order must be at least 2, got " + std::to_string(k_));
    if (initial_.size() != static_cast<std::size_t>(k_)) {
      throw DomainError("order " + std::to_string(k_) + " needs " + std::to_string(k_) +
                        " initial terms, got " + std::to_string(initial_.size()));
    }
  }

  int k() const noexcept { return k_; }
  const std::vector<BigInt>& initial() const noexcept { return initial_; }

  bool is_default() const { return initial_ == default_initial(k_); }

  static std::vector<BigInt> default_initial(int k) {
    if (k < 2) throw DomainError("recurrence order must be at least 2, got " + std::to_string(k));
    std::vector<BigInt> init(static_cast<std::size_t>(k), BigInt(0));
    init.back() = 1;
    return init;
  }

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;

 private:
  int k_;
  std::vector<BigInt> initial_;
};

/// A finite window G_0 .. G_{n-1} of a k-bonacci sequence.
class Sequence {
 public:
  Sequence(RecurrenceSpec spec, std::vector<BigInt> terms)
      : spec_(std::move(spec)), terms_(std::move(terms)) {}

  const RecurrenceSpec& spec() const noexcept { return spec_; }
  int k() const noexcept { return spec_.k(); }
  const std::vector<BigInt>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// G_n; throws CoverageError past the end of the window.
  const BigInt& at(std::size_t n) const {
    if (n >= terms_.size()) {
      throw CoverageError("term G_" + std::to_string(n) + " requested but only " +
                          std::to_string(terms_.size()) + " terms generated");
    }
    return terms_[n];
  }
  const BigInt& operator[](std::size_t n) const { return terms_[n]; }

  /// Throws CoverageError unless G_0 .. G_last are present.
  void require(std::size_t last) const { (void)at(last); }

 private:
  RecurrenceSpec spec_;
  std::vector<BigInt> terms_;
};

/// First `count` terms of the recurrence. Runs in O(count) big additions
/// using a sliding window sum.
inline Sequence generate(const RecurrenceSpec& spec, std::size_t count) {
  if (count < 1) throw DomainError("term count must be at least 1");
  const auto k = static_cast<std::size_t>(spec.k());
  std::vector<BigInt> terms;
  terms.reserve(count);
  BigInt window = 0;
  for (std::size_t n = 0; n < count; ++n) {
    if (n < k) {
      terms.push_back(spec.initial()[n]);
      window += terms.back();
    } else {
      terms.push_back(window);
      window += terms[n];
      window -= terms[n - k];
    }
  }
  return Sequence(spec, std::move(terms));
}

// ---------------------------------------------------------------------------
// b-files

struct BFileEntry {
  std::int64_t index;
  BigInt value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

class BFile {
 public:
  BFile() = default;
  explicit BFile(std::vector<BFileEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t n = 1; n < entries_.size(); ++n) {
      if (entries_[n].index != entries_[n - 1].index + 1) {
        throw FormatError("non-contiguous b-file indices: " + std::to_string(entries_[n - 1].index) +
                          " followed by " + std::to_string(entries_[n].index));
      }
    }
  }

  const std::vector<BFileEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  std::optional<std::int64_t> offset() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.front().index;
  }

  /// a(n), or nullopt when n lies outside the file.
  std::optional<BigInt> value_at(std::int64_t n) const {
    if (entries_.empty()) return std::nullopt;
    std::int64_t pos = n - entries_.front().index;
    if (pos < 0 || pos >= static_cast<std::int64_t>(entries_.size())) return std::nullopt;
    return entries_[static_cast<std::size_t>(pos)].value;
  }

  friend bool operator==(const BFile&, const BFile&) = default;

 private:
  std::vector<BFileEntry> entries_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

}  // namespace detail

/// Parses OEIS b-file text: one "n a(n)" pair per line, '#' comment lines and
/// blank lines skipped, surrounding whitespace ignored.
inline BFile parse_bfile(std::string_view text) {
  std::vector<BFileEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    ++line_no;
    auto line = detail::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;

    std::istringstream fields{std::string(line)};
    std::string index_text, value_text, extra;
    fields >> index_text >> value_text;
    if (value_text.empty()) throw ParseError(line_no, "expected \"n a(n)\", got \"" + std::string(line) + "\"");
    if (fields >> extra) throw ParseError(line_no, "trailing field \"" + extra + "\"");

    BigInt index, value;
    if (!parse_decimal(index_text, index)) throw ParseError(line_no, "bad index \"" + index_text + "\"");
    if (!parse_decimal(value_text, value)) throw ParseError(line_no, "bad value \"" + value_text + "\"");
    if (index > BigInt(INT64_MAX) || index < BigInt(INT64_MIN)) {
      throw ParseError(line_no, "index out of range");
    }
    auto n = static_cast<std::int64_t>(index);
    if (!entries.empty() && n != entries.back().index + 1) {
      throw FormatError("line " + std::to_string(line_no) + ": non-contiguous index " + std::to_string(n) +
                        " after " + std::to_string(entries.back().index));
    }
    entries.push_back({n, std::move(value)});
  }
  return BFile(std::move(entries));
}

inline BFile read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open b-file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_bfile(buffer.str());
}

struct CrosscheckReport {
  std::size_t terms_compared = 0;
  std::optional<std::size_t> first_mismatch;  ///< index n of the first disagreement
  BigInt generated;                           ///< G_n at the mismatch
  BigInt expected;                            ///< a(n) at the mismatch

  bool agree() const noexcept { return !first_mismatch.has_value(); }
};

/// Compares G_0 .. G_{count-1} against a(0) .. a(count-1).
inline CrosscheckReport crosscheck(const Sequence& seq, const BFile& bfile, std::size_t count) {
  if (seq.size() < count) {
    throw CoverageError("sequence has " + std::to_string(seq.size()) + " terms, " + std::to_string(count) +
                        " requested");
  }
  auto first = bfile.offset();
  if (!first || *first > 0 || !bfile.value_at(static_cast<std::int64_t>(count) - 1)) {
    throw CoverageError("b-file does not cover indices 0.." + std::to_string(count - 1));
  }
  CrosscheckReport report;
  report.terms_compared = count;
  for (std::size_t n = 0; n < count; ++n) {
    BigInt expected = *bfile.value_at(static_cast<std::int64_t>(n));
    if (seq[n] != expected) {
      report.first_mismatch = n;
      report.generated = seq[n];
      report.expected = std::move(expected);
      break;
    }
  }
  return report;
}

}  // namespace kbonacci
