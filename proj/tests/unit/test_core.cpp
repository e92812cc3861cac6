#include <algorithm>
#include <random>

#include "helpers.hpp"

namespace bdist::testing {
namespace {

TEST(Bit, RingLawsHoldExhaustively) {
  for (bool x : {false, true}) {
    for (bool y : {false, true}) {
      for (bool z : {false, true}) {
        const Bit a(x), b(y), c(z);
        EXPECT_EQ(a ^ a, Bit::zero());
        EXPECT_EQ(a ^ Bit::zero(), a);
        EXPECT_EQ(a * a, a);
        EXPECT_EQ(a * (b ^ c), (a * b) ^ (a * c));
        EXPECT_EQ(a ^ b, b ^ a);
        EXPECT_EQ((a ^ b) ^ c, a ^ (b ^ c));
      }
    }
  }
}

TEST(Parity, Examples) {
  EXPECT_EQ(parity(std::uint64_t{0}), Bit::zero());
  EXPECT_EQ(parity(std::uint64_t{7}), Bit::one());
  EXPECT_EQ(parity(std::uint64_t{4}), Bit::zero());
  EXPECT_EQ(parity(BigInt("123456789012345678901234567891")), Bit::one());
}

TEST(Parity, AdditivityCheckExamples) {
  EXPECT_EQ(parity_additivity_check(0, 0), std::make_pair(Bit::zero(), Bit::zero()));
  EXPECT_EQ(parity_additivity_check(3, 4), std::make_pair(Bit::one(), Bit::one()));
  EXPECT_EQ(parity_additivity_check(5, 7), std::make_pair(Bit::zero(), Bit::zero()));
}

TEST(Parity, AdditiveUpToSixtyFour) {
  for (unsigned m = 0; m <= 64; ++m) {
    for (unsigned n = 0; n <= 64; ++n) {
      const auto [lhs, rhs] = parity_additivity_check(m, n);
      ASSERT_EQ(lhs, rhs) << m << " + " << n;
    }
  }
}

TEST(Mod2Sum, Examples) {
  EXPECT_EQ(mod2_sum({}), Bit::zero());
  EXPECT_EQ(mod2_sum({Bit::one(), Bit::one(), Bit::one()}), Bit::one());
  EXPECT_EQ(mod2_sum({Bit::one(), Bit::zero(), Bit::one()}), Bit::zero());
}

TEST(Mod2Sum, OrderIndependent) {
  std::mt19937 rng(5);
  for (int round = 0; round < 50; ++round) {
    std::vector<Bit> bits;
    for (int i = 0; i < 9; ++i) bits.emplace_back(rng() % 2 == 1);
    const Bit s = mod2_sum(bits);
    std::shuffle(bits.begin(), bits.end(), rng);
    EXPECT_EQ(mod2_sum(bits), s);
  }
}

TEST(Rational, ParsesLiteralForms) {
  EXPECT_EQ(R("3/6"), Rational(1, 2));
  EXPECT_EQ(R("-0.125"), Rational(-1, 8));
  EXPECT_EQ(R("7"), Rational(7));
  EXPECT_EQ(R("2/4").str(), "1/2");
  EXPECT_EQ(R("-4/2").str(), "-2");
  EXPECT_EQ(error_of([] { R("1/0"); }), ErrorCode::Syntax);
  EXPECT_EQ(error_of([] { R("x"); }), ErrorCode::Syntax);
}

TEST(Rational, ReducedAndOrdered) {
  const Rational a(BigInt(6), BigInt(-4));
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_LT(R("1/3"), R("1/2"));
  EXPECT_EQ(midpoint(R("0"), R("1")), R("1/2"));
  EXPECT_EQ(rational_lcm(R("1/2"), R("1/3")), R("1"));
  EXPECT_EQ(rational_lcm(R("3/2"), R("1")), R("3"));
}

TEST(Window, RejectsReversedEnds) {
  EXPECT_EQ(error_of([] { Window(1, 0); }), ErrorCode::InvalidWindow);
  const Window w(0, 1);
  EXPECT_TRUE(w.contains(R("1")));
  EXPECT_FALSE(w.contains(R("1.5")));
  EXPECT_EQ(w.hull(Window(3, 4)), Window(0, 4));
}

}  // namespace
}  // namespace bdist::testing
