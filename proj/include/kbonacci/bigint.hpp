#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kbonacci {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// Parses an optionally signed decimal integer. Returns false on any other input.
inline bool parse_decimal(const std::string& text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t pos = start; pos < text.size(); ++pos) {
    if (text[pos] < '0' || text[pos] > '9') return false;
  }
  out = BigInt(text.substr(text[0] == '+' ? 1 : 0));
  return true;
}

}  // namespace kbonacci
