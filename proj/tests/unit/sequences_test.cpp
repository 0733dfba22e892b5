#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "kbonacci/sequences.hpp"

using namespace kbonacci;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

std::string data_path(const std::string& name) { return std::string(KBONACCI_TEST_DATA) + "/" + name; }

}  // namespace

TEST(GenerateTest, FibonacciDefault) {
  EXPECT_EQ(generate(RecurrenceSpec(2), 8).terms(), ints({0, 1, 1, 2, 3, 5, 8, 13}));
}

TEST(GenerateTest, TribonacciDefault) {
  EXPECT_EQ(generate(RecurrenceSpec(3), 8).terms(), ints({0, 0, 1, 1, 2, 4, 7, 13}));
}

TEST(GenerateTest, ShortWindowIsInitialConditions) {
  EXPECT_EQ(generate(RecurrenceSpec(5), 5).terms(), ints({0, 0, 0, 0, 1}));
  EXPECT_EQ(generate(RecurrenceSpec(5), 2).terms(), ints({0, 0}));
}

TEST(GenerateTest, CustomInitialConditions) {
  // Lucas numbers.
  EXPECT_EQ(generate(RecurrenceSpec(2, ints({2, 1})), 7).terms(), ints({2, 1, 3, 4, 7, 11, 18}));
}

TEST(GenerateTest, RejectsBadSpecs) {
  EXPECT_THROW(RecurrenceSpec(1), DomainError);
  EXPECT_THROW(RecurrenceSpec(0), DomainError);
  EXPECT_THROW(RecurrenceSpec(3, ints({0, 1})), DomainError);
  EXPECT_THROW(RecurrenceSpec(2, ints({0, 1, 1})), DomainError);
  EXPECT_THROW(generate(RecurrenceSpec(2), 0), DomainError);
}

TEST(GenerateTest, DefaultInitialIsZerosThenOne) {
  for (int k = 2; k <= 12; ++k) {
    auto init = RecurrenceSpec::default_initial(k);
    ASSERT_EQ(init.size(), static_cast<std::size_t>(k));
    for (int n = 0; n + 1 < k; ++n) EXPECT_EQ(init[static_cast<std::size_t>(n)], 0);
    EXPECT_EQ(init.back(), 1);
    EXPECT_TRUE(RecurrenceSpec(k).is_default());
  }
}

TEST(GenerateTest, RecurrenceAndShiftProperties) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> order(2, 9);
  std::uniform_int_distribution<int> value(-50, 50);
  std::uniform_int_distribution<int> length(1, 120);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = order(rng);
    std::vector<BigInt> init;
    for (int n = 0; n < k; ++n) init.emplace_back(value(rng));
    const RecurrenceSpec spec(k, init);
    const auto n = static_cast<std::size_t>(length(rng));
    const Sequence seq = generate(spec, n);
    ASSERT_EQ(seq.size(), n);
    for (std::size_t t = 0; t < std::min<std::size_t>(n, static_cast<std::size_t>(k)); ++t) EXPECT_EQ(seq[t], init[t]);
    for (std::size_t t = static_cast<std::size_t>(k); t < n; ++t) {
      BigInt sum = 0;
      for (int back = 1; back <= k; ++back) sum += seq[t - static_cast<std::size_t>(back)];
      EXPECT_EQ(seq[t], sum);
    }
    auto longer = generate(spec, n + 1).terms();
    longer.pop_back();
    EXPECT_EQ(longer, seq.terms());
  }
}

TEST(GenerateTest, TermsExceedSixtyFourBits) {
  const Sequence fib = generate(RecurrenceSpec(2), 301);
  EXPECT_EQ(fib[300].str(), "222232244629420445529739893461909967206666939096499764990979600");
}

TEST(SequenceTest, AtThrowsPastWindow) {
  const Sequence seq = generate(RecurrenceSpec(3), 4);
  EXPECT_THROW(seq.at(4), CoverageError);
  EXPECT_NO_THROW(seq.require(3));
}

TEST(BFileTest, ParsesPairs) {
  BFile b = parse_bfile("0 0\n1 1\n2 1");
  EXPECT_EQ(b.entries(), (std::vector<BFileEntry>{{0, 0}, {1, 1}, {2, 1}}));
}

TEST(BFileTest, SkipsCommentsAndBlankLines) {
  BFile b = parse_bfile("# comment\n0 0\n1 1");
  EXPECT_EQ(b.entries(), (std::vector<BFileEntry>{{0, 0}, {1, 1}}));
  BFile c = parse_bfile("\n  # A000045\n\n   0   0  \r\n\t1 1\n\n");
  EXPECT_EQ(c.entries(), (std::vector<BFileEntry>{{0, 0}, {1, 1}}));
}

TEST(BFileTest, NonContiguousIndicesRejected) {
  EXPECT_THROW(parse_bfile("0 0\n2 1"), FormatError);
  EXPECT_THROW(BFile({{0, 0}, {2, 1}}), FormatError);
}

TEST(BFileTest, MalformedLineReportsLineNumber) {
  try {
    parse_bfile("# header\n0 0\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_bfile("0"), ParseError);
  EXPECT_THROW(parse_bfile("0 1 2"), ParseError);
}

TEST(BFileTest, NegativeAndHugeValues) {
  BFile b = parse_bfile("5 -3\n6 123456789012345678901234567890");
  EXPECT_EQ(b.offset(), 5);
  EXPECT_EQ(*b.value_at(5), -3);
  EXPECT_EQ(b.value_at(6)->str(), "123456789012345678901234567890");
  EXPECT_FALSE(b.value_at(7).has_value());
}

TEST(CrosscheckTest, FibonacciAgreesWithA000045) {
  auto report = crosscheck(generate(RecurrenceSpec(2), 30), read_bfile(data_path("b000045.txt")), 30);
  EXPECT_TRUE(report.agree());
  EXPECT_EQ(report.terms_compared, 30u);
}

TEST(CrosscheckTest, TribonacciAgreesWithA000073) {
  EXPECT_TRUE(crosscheck(generate(RecurrenceSpec(3), 30), read_bfile(data_path("b000073.txt")), 30).agree());
}

TEST(CrosscheckTest, FibonacciDiffersFromTribonacciAtIndexOne) {
  auto report = crosscheck(generate(RecurrenceSpec(2), 30), read_bfile(data_path("b000073.txt")), 30);
  ASSERT_FALSE(report.agree());
  EXPECT_EQ(*report.first_mismatch, 1u);
  EXPECT_EQ(report.generated, 1);
  EXPECT_EQ(report.expected, 0);
}

TEST(CrosscheckTest, InsufficientCoverage) {
  BFile short_file = parse_bfile("0 0\n1 1\n2 1");
  EXPECT_THROW(crosscheck(generate(RecurrenceSpec(2), 30), short_file, 30), CoverageError);
  EXPECT_THROW(crosscheck(generate(RecurrenceSpec(2), 10), read_bfile(data_path("b000045.txt")), 30), CoverageError);
  BFile offset_one = parse_bfile("1 1\n2 1\n3 2");
  EXPECT_THROW(crosscheck(generate(RecurrenceSpec(2), 3), offset_one, 3), CoverageError);
}

TEST(CrosscheckTest, MissingFile) { EXPECT_THROW(read_bfile(data_path("does-not-exist.txt")), Error); }
