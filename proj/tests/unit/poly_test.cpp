#include <random>

#include <gtest/gtest.h>

#include "kbonacci/poly.hpp"

using namespace kbonacci;
using namespace kbonacci::poly_vars;

TEST(PolyTest, CancellationLeavesZero) {
  Poly p = i * j + (-(i * j));
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p, Poly(0));
  EXPECT_EQ(p.to_string(), "0");
  EXPECT_TRUE(p.terms().empty());
}

TEST(PolyTest, CanonicalFormIgnoresConstructionOrder) {
  EXPECT_EQ((i + 1) * (k - 2), i * k - 2 * i + k - 2);
  EXPECT_EQ((i + j) * (i + j), i * i + 2 * i * j + j * j);
  EXPECT_EQ((i - j).pow(3), (i - j) * (i - j) * (i - j));
}

TEST(PolyTest, SubstituteLastColumnIntoOffDiagonalFormula) {
  Poly off = 2 * (i + 1) * (j - k + 2);
  EXPECT_EQ(off.substitute(Var::j, k - 1), 2 * (i + 1));
}

TEST(PolyTest, SubstituteShiftThenNegate) {
  Poly diag = 4 - (i + 3) * (k - i);
  EXPECT_EQ(-diag.substitute(Var::i, i + 1), (i + 4) * (k - i - 1) - 4);
}

TEST(PolyTest, SimultaneousSubstitutionDoesNotChain) {
  Poly p = i * 10 + j;
  // i -> j and j -> k at once: 10 j + k, not 10 k + k.
  EXPECT_EQ(p.substitute({{Var::i, j}, {Var::j, k}}), 10 * j + k);
}

TEST(PolyTest, EvaluateAndDegree) {
  Poly p = 4 - (i + 3) * (k - i);
  EXPECT_EQ(p.evaluate({1, 0, 3}), -4);
  EXPECT_EQ(p.evaluate({-1, 0, 2}), -2);
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_EQ(Poly(7).as_constant(), BigInt(7));
  EXPECT_FALSE(p.as_constant().has_value());
}

TEST(PolyTest, ToStringExpandedForm) {
  EXPECT_EQ((2 * k - 2).to_string(), "2*k - 2");
  EXPECT_EQ((-(i * i) + 3).to_string(), "-i^2 + 3");
  EXPECT_EQ((i * j * k).to_string(), "i*j*k");
}

namespace {

Poly random_poly(std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> coef(-9, 9);
  Poly p;
  for (int n = 0; n < terms; ++n) {
    p += Poly::monomial({static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng)),
                         static_cast<unsigned>(exp(rng))},
                        coef(rng));
  }
  return p;
}

Poly random_affine(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  return coef(rng) * i + coef(rng) * j + coef(rng) * k + coef(rng);
}

}  // namespace

// Substitution is a ring homomorphism, and commutes with evaluation.
TEST(PolyTest, SubstitutionIsRingHomomorphism) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> point(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = random_poly(rng);
    Poly b = random_poly(rng);
    Var v = kAllVars[static_cast<std::size_t>(pick(rng))];
    Poly r = random_affine(rng);
    EXPECT_EQ((a + b).substitute(v, r), a.substitute(v, r) + b.substitute(v, r));
    EXPECT_EQ((a * b).substitute(v, r), a.substitute(v, r) * b.substitute(v, r));
    EXPECT_EQ((-a).substitute(v, r), -a.substitute(v, r));

    IndexPoint at{point(rng), point(rng), point(rng)};
    IndexPoint moved = at;
    const auto value = static_cast<std::int64_t>(r.evaluate(at));
    if (v == Var::i) moved.i = value;
    if (v == Var::j) moved.j = value;
    if (v == Var::k) moved.k = value;
    EXPECT_EQ(a.substitute(v, r).evaluate(at), a.evaluate(moved));
  }
}

TEST(PolyTest, RingAxiomsOnRandomPolys) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_TRUE((a - a).is_zero());
  }
}
