#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials over the integers in the three
 *        index variables i, j and k.
 *
 * A Poly is a map from exponent triples (e_i, e_j, e_k) to nonzero
 * arbitrary-precision coefficients. Every operation returns a canonical
 * value (no stored zeros), so structural equality is polynomial equality.
 *
 * Only what the coefficient bookkeeping needs is provided: ring operations,
 * simultaneous substitution of variables by polynomials, and evaluation.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kbonacci/bigint.hpp"

namespace kbonacci {

enum class Var : std::size_t { i = 0, j = 1, k = 2 };

inline constexpr std::array<Var, 3> kAllVars = {Var::i, Var::j, Var::k};

inline char var_name(Var v) {
  switch (v) {
    case Var::i: return 'i';
    case Var::j: return 'j';
    case Var::k: return 'k';
  }
  return '?';
}

using Exponents = std::array<unsigned, 3>;

/// A concrete point (i, j, k) at which to evaluate a Poly.
struct IndexPoint {
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;
};

class Poly {
 public:
  using Terms = std::map<Exponents, BigInt>;

  Poly() = default;
  Poly(std::int64_t constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_[Exponents{0, 0, 0}] = constant;
  }
  Poly(const BigInt& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_[Exponents{0, 0, 0}] = constant;
  }

  static Poly var(Var v) {
    Poly p;
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(v)] = 1;
    p.terms_[e] = 1;
    return p;
  }

  static Poly monomial(const Exponents& e, const BigInt& coefficient) {
    Poly p;
    if (coefficient != 0) p.terms_[e] = coefficient;
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
  }

  /// Coefficient of the given monomial (zero when absent).
  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// The constant term, if the polynomial has no variable terms.
  std::optional<BigInt> as_constant() const {
    if (terms_.empty()) return BigInt(0);
    if (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0}) {
      return terms_.begin()->second;
    }
    return std::nullopt;
  }

  Poly& operator+=(const Poly& other) {
    for (const auto& [e, c] : other.terms_) accumulate(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    for (const auto& [e, c] : other.terms_) accumulate(e, -c);
    return *this;
  }

  Poly& operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator-(const Poly& a) {
    Poly r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        r.accumulate(Exponents{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(unsigned exponent) const {
    Poly result(1);
    for (unsigned n = 0; n < exponent; ++n) result *= *this;
    return result;
  }

  /// Simultaneous substitution: every listed variable is replaced by its
  /// polynomial in one pass, so {i -> j, j -> k-1} does not chain.
  Poly substitute(const std::map<Var, Poly>& replacements) const {
    std::array<Poly, 3> images;
    for (Var v : kAllVars) {
      auto it = replacements.find(v);
      images[static_cast<std::size_t>(v)] = it == replacements.end() ? var(v) : it->second;
    }
    Poly result;
    for (const auto& [e, c] : terms_) {
      Poly term(c);
      for (std::size_t axis = 0; axis < 3; ++axis) {
        if (e[axis] != 0) term *= images[axis].pow(e[axis]);
      }
      result += term;
    }
    return result;
  }

  Poly substitute(Var v, const Poly& replacement) const { return substitute({{v, replacement}}); }

  BigInt evaluate(const IndexPoint& at) const {
    const std::array<BigInt, 3> values{BigInt(at.i), BigInt(at.j), BigInt(at.k)};
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) {
      BigInt term = c;
      for (std::size_t axis = 0; axis < 3; ++axis) {
        for (unsigned n = 0; n < e[axis]; ++n) term *= values[axis];
      }
      sum += term;
    }
    return sum;
  }

  /// Human-readable expanded form, highest total degree first, e.g. "2*k - 2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      unsigned da = a.first[0] + a.first[1] + a.first[2];
      unsigned db = b.first[0] + b.first[1] + b.first[2];
      if (da != db) return da > db;
      return a.first > b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
      BigInt magnitude = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out << '-';
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool constant = e == Exponents{0, 0, 0};
      bool wrote = false;
      if (constant || magnitude != 1) {
        out << magnitude;
        wrote = true;
      }
      for (Var v : kAllVars) {
        unsigned power = e[static_cast<std::size_t>(v)];
        if (power == 0) continue;
        if (wrote) out << '*';
        out << var_name(v);
        if (power > 1) out << '^' << power;
        wrote = true;
      }
    }
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void accumulate(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Shorthands for building polynomials in tests and tables: `using namespace kbonacci::poly_vars;`.
namespace poly_vars {
inline const Poly i = Poly::var(Var::i);
inline const Poly j = Poly::var(Var::j);
inline const Poly k = Poly::var(Var::k);
}  // namespace poly_vars

}  // namespace kbonacci
